//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use orbitope_core::chamber::{
    chambers_to_json, enumerate_full_chambers, load_cache, reference_chamber, write_cache, Chamber,
};
use orbitope_core::gf2::{Gf2Matrix, Gf2Vector};
use orbitope_core::homology::{
    betti_x5, betti_x6, check_naturality, cycle_space_3n9, f_omega_system, h7_system, keel_system,
    structural_checks, top_cycle_quotient, vertex_cokernel_dim, BettiTable, Mode,
};
use orbitope_core::params::{divisor_dictionary, verify_partition};
use orbitope_core::perm::Permutation;
use orbitope_core::polytope::{disjoint_families, enumerate_admissible_polytopes, SigmaLabel};
use orbitope_core::report::betti_json;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn nonzero(t: &BettiTable) -> BTreeMap<usize, usize> {
    t.dims.iter().filter(|(_, d)| **d > 0).map(|(k, d)| (*k, *d)).collect()
}

fn table(entries: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    entries.iter().copied().collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let chambers = enumerate_full_chambers(5).map_err(|e| e.to_string())?;
    let t = betti_x5(&chambers).map_err(|e| e.to_string())?;
    let cold = start.elapsed();

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    write_cache(dir.path(), 5, &chambers).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let cached = load_cache(dir.path(), 5).map_err(|e| e.to_string())?;
    let warm_table = betti_x5(&cached).map_err(|e| e.to_string())?;
    let warm = start.elapsed();

    ensure(nonzero(&t) == table(&[(0, 1), (5, 1), (6, 1), (8, 1)]), format!("table {:?}", t.dims))?;
    ensure(t.dims.len() == 9, "degrees 0..=8")?;
    ensure(warm_table == t, "warm table differs")?;
    ensure(cold < Duration::from_secs(30), format!("cold run {cold:?}"))?;
    ensure(warm < Duration::from_secs(1), format!("warm run {warm:?}"))?;
    Ok(format!("X5 table {:?}; cold {cold:.2?}, warm {warm:.2?}", nonzero(&t)))
}

fn criterion_2(chambers: &[Chamber], enumeration: Duration) -> Outcome {
    let start = Instant::now();
    let t = betti_x6(chambers, Mode::Paper).map_err(|e| e.to_string())?;
    let homology = start.elapsed();
    let expected = table(&[(0, 1), (5, 1), (6, 3), (7, 11), (8, 1), (9, 1), (11, 1)]);
    ensure(nonzero(&t) == expected, format!("table {:?}", nonzero(&t)))?;
    ensure(
        t.diagnostics.iter().any(|d| d.starts_with("H6 relation rank")),
        "missing H6 rank diagnostic",
    )?;
    let ex = betti_x6(chambers, Mode::Exhaustive).map_err(|e| e.to_string())?;
    ensure(
        ex.diagnostics.iter().any(|d| d.starts_with("discrepancy")),
        "exhaustive mode did not report its H6 discrepancy",
    )?;
    ensure(enumeration < Duration::from_secs(600), format!("enumeration {enumeration:?}"))?;
    ensure(homology < Duration::from_secs(60), format!("homology {homology:?}"))?;
    Ok(format!(
        "X6 paper table {:?}; exhaustive H6 = {}; enumeration {enumeration:.2?}, homology {homology:.2?}",
        nonzero(&t),
        ex.dim(6)
    ))
}

fn criterion_3(c5: &[Chamber], c6: &[Chamber]) -> Outcome {
    let tables = [
        betti_x5(c5).map_err(|e| e.to_string())?,
        betti_x6(c6, Mode::Paper).map_err(|e| e.to_string())?,
        betti_x6(c6, Mode::Exhaustive).map_err(|e| e.to_string())?,
    ];
    let mut count = 0;
    for t in &tables {
        let r = structural_checks(t);
        for c in &r.checks {
            ensure(c.passed, format!("n = {}: {} fails", t.n, c.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} structural identities hold for n = 5, 6"))
}

fn criterion_4() -> Outcome {
    let mut dims = Vec::new();
    for n in [5, 6] {
        let basis = cycle_space_3n9(n).map_err(|e| e.to_string())?;
        ensure(basis.len() == (n - 2) * (n - 1) / 2, format!("n = {n}: dim {}", basis.len()))?;
        let mut k = 0;
        for m in 1..n {
            for i in m + 1..n {
                let want: Vec<SigmaLabel> = {
                    let mut v = vec![
                        SigmaLabel::single(&[m, i]),
                        SigmaLabel::single(&[m, n]),
                        SigmaLabel::single(&[i, n]),
                    ];
                    v.sort();
                    v
                };
                let got: Vec<SigmaLabel> = basis[k].support().cloned().collect();
                ensure(got == want, format!("basis element {k} is {}", basis[k]))?;
                k += 1;
            }
        }
        dims.push(basis.len());
    }
    Ok(format!("cycle space dims {dims:?}, triangle bases"))
}

/// Brute force: divisors as subsets avoiding the last point, relations as byte rows.
fn keel_oracle(n: usize) -> (usize, usize) {
    let divs: Vec<u32> = (1u32..1 << (n - 1))
        .filter(|m| (2..=n - 2).contains(&(m.count_ones() as usize)))
        .collect();
    let side = |d: u32, x: usize| d >> (x - 1) & 1 == 1;
    let sep = |d: u32, a: usize, b: usize, c: usize, e: usize| {
        side(d, a) == side(d, b) && side(d, c) == side(d, e) && side(d, a) != side(d, c)
    };
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for e in c + 1..=n {
                    for (p, q) in [((b, c, e), (c, b, e)), ((b, c, e), (e, b, c))] {
                        rows.push(
                            divs.iter()
                                .map(|&d| sep(d, a, p.0, p.1, p.2) != sep(d, a, q.0, q.1, q.2))
                                .collect(),
                        );
                    }
                }
            }
        }
    }
    let mut rank = 0;
    for col in 0..divs.len() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col] {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= *y);
            }
        }
        rank += 1;
    }
    (divs.len(), divs.len() - rank)
}

fn criterion_5() -> Outcome {
    let mut got = Vec::new();
    for (n, gens, quotient) in [(4, 3, 1), (5, 10, 5), (6, 25, 16)] {
        let sys = keel_system(n).map_err(|e| e.to_string())?;
        let engine = (sys.generator_count(), sys.quotient_dim());
        ensure(engine == (gens, quotient), format!("n = {n}: engine {engine:?}"))?;
        ensure(keel_oracle(n) == engine, format!("n = {n}: oracle {:?}", keel_oracle(n)))?;
        got.push(engine);
    }
    Ok(format!("(divisors, quotient) = {got:?}, oracle agrees"))
}

/// A K-family is full-dimensional iff the graph of vertices `ij` it keeps has no
/// bipartite component, i.e. the kept vertices affinely span the hypersimplex.
fn family_oracle(n: usize) -> usize {
    let mut count = 0;
    for family in disjoint_families(n) {
        let kept = |i: usize, j: usize| !family.iter().any(|s| s.contains(i) && s.contains(j));
        let mut colour = vec![None::<bool>; n + 1];
        let mut ok = true;
        for start in 1..=n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            let mut bipartite = true;
            while let Some(v) = stack.pop() {
                for w in (1..=n).filter(|&w| w != v && kept(v, w)) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!colour[v].unwrap());
                            stack.push(w);
                        }
                        Some(c) if c == colour[v].unwrap() => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
            ok &= !bipartite;
        }
        count += usize::from(ok);
    }
    count + 1
}

fn criterion_6() -> Outcome {
    let p5 = enumerate_admissible_polytopes(5).map_err(|e| e.to_string())?;
    let p6 = enumerate_admissible_polytopes(6).map_err(|e| e.to_string())?;
    let full5 = p5.iter().filter(|p| p.is_full_dimensional()).count();
    let full6 = p6.iter().filter(|p| p.is_full_dimensional()).count();
    let slices6 = p6.iter().filter(|p| p.is_slice()).count();
    let slice_oracle = (1u32..1 << 6).filter(|m| (2..=4).contains(&m.count_ones())).count() / 2;
    ensure((full5, full6, slices6) == (36, 171, 25), format!("{full5}, {full6}, {slices6}"))?;
    ensure(family_oracle(5) == full5, format!("oracle n = 5: {}", family_oracle(5)))?;
    ensure(family_oracle(6) == full6, format!("oracle n = 6: {}", family_oracle(6)))?;
    ensure(slice_oracle == slices6, format!("slice oracle {slice_oracle}"))?;
    Ok("full-dimensional 36 / 171, slices 25; oracles agree".into())
}

fn relabeled(cs: &[Chamber], perm: &Permutation, n: usize) -> Vec<Chamber> {
    cs.iter()
        .map(|c| Chamber {
            omega: c.omega.iter().map(|l| l.permuted(perm, n)).collect(),
            witness: c.witness.permuted(perm.images()),
            ..c.clone()
        })
        .collect()
}

fn chamber_dims(cs: &[Chamber], n: usize) -> Result<Vec<Vec<usize>>, String> {
    let grades: &[usize] = if n == 5 { &[2] } else { &[4, 2] };
    let mut out = Vec::new();
    for &g in grades {
        let mut d: Vec<usize> = cs
            .iter()
            .map(|c| f_omega_system(c, n, g).map(|s| s.quotient_dim()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        d.sort_unstable();
        out.push(d);
    }
    let top = top_cycle_quotient(cs, n).map_err(|e| e.to_string())?;
    out.push(vec![top.vanishing_dim, top.quotient]);
    Ok(out)
}

fn gf2_axioms(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let trials = 50;
    for _ in 0..trials {
        let rows = rng.gen_range(1..30);
        let cols = rng.gen_range(1..70);
        let m = Gf2Matrix::from_rows(
            cols,
            (0..rows)
                .map(|_| Gf2Vector::from_bits(&(0..cols).map(|_| rng.gen::<bool>()).collect::<Vec<_>>()))
                .collect(),
        );
        let kernel = m.kernel_basis();
        ensure(m.rank() + kernel.len() == cols, "rank-nullity")?;
        ensure(m.rank() == m.transpose().rank(), "row rank = column rank")?;
        ensure(kernel.iter().all(|k| m.mul_vec(k).is_zero()), "kernel annihilation")?;
    }
    Ok(trials)
}

fn criterion_7(c5: &[Chamber], c6: &[Chamber]) -> Outcome {
    let nat5 = check_naturality(c5, 5, 2, 200, 5).map_err(|e| e.to_string())?;
    ensure(nat5.failures.is_empty(), format!("n = 5: {:?}", nat5.failures.first()))?;
    let mut pairs6 = 0;
    for g in [4, 2] {
        let r = check_naturality(c6, 6, g, 10, 6).map_err(|e| e.to_string())?;
        ensure(r.failures.is_empty(), format!("n = 6 grade {g}: {:?}", r.failures.first()))?;
        ensure(r.pairs_checked >= 10_000, format!("only {} pairs", r.pairs_checked))?;
        pairs6 += r.pairs_checked;
    }

    for (n, cs) in [(5, c5), (6, c6)] {
        let c0 = reference_chamber(cs, n).ok_or("no reference chamber")?;
        let dict = divisor_dictionary(n).map_err(|e| e.to_string())?;
        let r = verify_partition(n, c0, &dict);
        ensure(r.is_ok(), format!("partition n = {n}: {:?}", r.failures))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, cs) in [(5, c5), (6, c6)] {
        let base = chamber_dims(cs, n)?;
        for _ in 0..10 {
            let perm = Permutation::random(n, &mut rng);
            ensure(
                chamber_dims(&relabeled(cs, &perm, n), n)? == base,
                format!("n = {n}: relabeling {:?} changes dimensions", perm.images()),
            )?;
        }
    }

    let trials = gf2_axioms(&mut rng)?;

    for n in [5, 6] {
        let runs: Vec<(String, String)> = (0..2)
            .map(|_| -> Result<(String, String), String> {
                let cs = enumerate_full_chambers(n).map_err(|e| e.to_string())?;
                let t = if n == 5 { betti_x5(&cs) } else { betti_x6(&cs, Mode::Paper) }
                    .map_err(|e| e.to_string())?;
                Ok((chambers_to_json(n, &cs).map_err(|e| e.to_string())?, betti_json(&t)))
            })
            .collect::<Result<_, _>>()?;
        ensure(runs[0] == runs[1], format!("n = {n}: cold runs differ"))?;
    }
    Ok(format!(
        "naturality {} pairs (n = 5), {pairs6} pairs (n = 6); partitions; 10 relabelings; {trials} random GF(2) matrices; cold runs identical",
        nat5.pairs_checked
    ))
}

fn criterion_8() -> Outcome {
    let h7 = h7_system();
    ensure(h7.generator_count() == 15 && h7.relations().row_count() == 15, "15 generators, 15 rows")?;
    ensure((h7.rank(), h7.quotient_dim()) == (4, 11), format!("rank {}", h7.rank()))?;
    ensure(vertex_cokernel_dim(5) == 1, "H5(X5) cokernel")?;
    ensure(vertex_cokernel_dim(6) == 1, "H8(X6) cokernel")?;
    Ok("g_s + g_r rows rank 4, quotient 11; K5 and K6 cokernels 1".into())
}

fn main() {
    let mut results: Vec<(usize, Outcome)> = Vec::new();
    results.push((1, criterion_1()));

    let start = Instant::now();
    let c6 = enumerate_full_chambers(6).expect("n = 6 chambers");
    let enumeration = start.elapsed();
    let c5 = enumerate_full_chambers(5).expect("n = 5 chambers");

    results.push((2, criterion_2(&c6, enumeration)));
    results.push((3, criterion_3(&c5, &c6)));
    results.push((4, criterion_4()));
    results.push((5, criterion_5()));
    results.push((6, criterion_6()));
    results.push((7, criterion_7(&c5, &c6)));
    results.push((8, criterion_8()));

    let mut failed = 0;
    for (i, r) in &results {
        match r {
            Ok(msg) => println!("criterion {i}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i}: FAIL  {msg}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
