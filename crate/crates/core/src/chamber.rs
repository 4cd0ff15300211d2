//! Chambers of maximal dimension cut out of `Delta_{n,2}` by the walls
//! `sum_S x = 1`, `x_i = 0` and `x_i = 1`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use num_traits::Signed;
use rand::seq::index::sample;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::{AffineForm, Requirement, StrictSystem};
use crate::par;
use crate::perm::Permutation;
use crate::polytope::{enumerate_admissible_polytopes, AdmissiblePolytope, SigmaLabel, Support};
use crate::rational::{int, rat, RationalPoint};

pub const CHAMBER_SCHEMA: &str = "orbitope/chambers/v1";

pub fn check_chamber_n(n: usize) -> Result<()> {
    if (4..=6).contains(&n) {
        Ok(())
    } else {
        Err(Error::Domain {
            n,
            supported: "{4, 5, 6}",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wall {
    SumEqOne(Support),
    CoordZero(usize),
    CoordOne(usize),
}

impl Wall {
    fn form(self, n: usize) -> AffineForm {
        match self {
            Self::SumEqOne(s) => AffineForm::mass(n, s.0, 1, 1),
            Self::CoordZero(i) => AffineForm::mass(n, 1 << (i - 1), 0, 1),
            Self::CoordOne(i) => AffineForm::mass(n, 1 << (i - 1), 1, 1),
        }
    }

    #[must_use]
    pub fn sign_at(self, n: usize, x: &RationalPoint) -> Sign {
        Sign::of(&self.form(n).eval(x))
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SumEqOne(s) => write!(f, "sum{{{s}}}=1"),
            Self::CoordZero(i) => write!(f, "x{i}=0"),
            Self::CoordOne(i) => write!(f, "x{i}=1"),
        }
    }
}

impl Serialize for Wall {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sum walls by (size, elements), then `x_i = 0`, then `x_i = 1`.
pub fn walls(n: usize) -> Result<Vec<Wall>> {
    check_chamber_n(n)?;
    let reps: BTreeSet<(usize, Support)> = (1u32..1 << n)
        .filter(|m| (2..=n / 2).contains(&(m.count_ones() as usize)))
        .map(|m| {
            let s = Support(m).wall_rep(n);
            (s.len(), s)
        })
        .collect();
    let mut out: Vec<Wall> = reps.into_iter().map(|(_, s)| Wall::SumEqOne(s)).collect();
    out.extend((1..=n).map(Wall::CoordZero));
    out.extend((1..=n).map(Wall::CoordOne));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    fn of(v: &crate::rational::Rational) -> Self {
        if v.is_positive() {
            Self::Pos
        } else if v.is_negative() {
            Self::Neg
        } else {
            Self::Zero
        }
    }

    #[must_use]
    pub fn as_char(self) -> char {
        match self {
            Self::Neg => '-',
            Self::Zero => '0',
            Self::Pos => '+',
        }
    }
}

#[must_use]
pub fn sign_vector(n: usize, walls: &[Wall], x: &RationalPoint) -> Vec<Sign> {
    walls.iter().map(|w| w.sign_at(n, x)).collect()
}

#[must_use]
pub fn sign_string(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub id: usize,
    pub signs: String,
    pub witness: RationalPoint,
    pub dim: usize,
    pub boundary_flag: bool,
    pub omega: BTreeSet<SigmaLabel>,
}

impl Chamber {
    #[must_use]
    pub fn contains_label(&self, label: &SigmaLabel) -> bool {
        self.omega.contains(label)
    }
}

/// Signs on the sum walls packed as bits (1 = positive side).
type SumBits = u64;

/// The walls of one `n` together with the symmetric-group action on sign patterns.
pub struct Arrangement {
    pub n: usize,
    pub walls: Vec<Wall>,
    sum_walls: Vec<Support>,
    /// For each permutation, where each sum wall goes and whether its sign flips.
    actions: Vec<Vec<(usize, bool)>>,
    perms: Vec<Permutation>,
}

impl Arrangement {
    pub fn new(n: usize) -> Result<Self> {
        let walls = walls(n)?;
        let sum_walls: Vec<Support> = walls
            .iter()
            .filter_map(|w| match w {
                Wall::SumEqOne(s) => Some(*s),
                _ => None,
            })
            .collect();
        let index: BTreeMap<u32, usize> = sum_walls
            .iter()
            .enumerate()
            .map(|(i, s)| (s.0, i))
            .collect();
        let perms = Permutation::all(n);
        let actions = perms
            .iter()
            .map(|p| {
                sum_walls
                    .iter()
                    .map(|s| {
                        let img = s.permuted(p);
                        let rep = img.wall_rep(n);
                        (index[&rep.0], rep != img)
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            walls,
            sum_walls,
            actions,
            perms,
        })
    }

    #[must_use]
    pub fn sum_wall_count(&self) -> usize {
        self.sum_walls.len()
    }

    fn act(&self, perm_index: usize, bits: SumBits) -> SumBits {
        self.actions[perm_index]
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &(to, flip))| {
                let b = (bits >> k & 1 == 1) ^ flip;
                acc | SumBits::from(b) << to
            })
    }

    fn canonical(&self, bits: SumBits) -> SumBits {
        (0..self.perms.len())
            .map(|p| self.act(p, bits))
            .min()
            .expect("at least the identity")
    }

    /// Strict system for the open chamber with the given sum-wall signs.
    fn system(&self, bits: SumBits) -> StrictSystem {
        let mut sys = StrictSystem::new(self.n).with_open_box();
        for (k, s) in self.sum_walls.iter().enumerate() {
            let sign = if bits >> k & 1 == 1 { 1 } else { -1 };
            sys.push(AffineForm::mass(self.n, s.0, 1, sign), Requirement::Positive);
        }
        sys
    }

    /// A max-min-slack witness of the open chamber, if it is nonempty.
    #[must_use]
    pub fn realize(&self, bits: SumBits) -> Option<RationalPoint> {
        self.system(bits).max_min_slack().map(|(p, _)| p)
    }

    /// Sum-wall bits of a point off every wall; `None` if it lies on a wall
    /// or outside the open hypersimplex.
    #[must_use]
    pub fn bits_of(&self, x: &RationalPoint) -> Option<SumBits> {
        let signs = sign_vector(self.n, &self.walls, x);
        let k = self.sum_walls.len();
        let box_ok = signs[k..k + self.n].iter().all(|s| *s == Sign::Pos)
            && signs[k + self.n..].iter().all(|s| *s == Sign::Neg);
        if !box_ok {
            return None;
        }
        let mut bits = 0;
        for (i, s) in signs[..k].iter().enumerate() {
            match s {
                Sign::Pos => bits |= 1 << i,
                Sign::Neg => {}
                Sign::Zero => return None,
            }
        }
        Some(bits)
    }

    fn signs_of_bits(&self, bits: SumBits) -> String {
        let mut s: String = (0..self.sum_walls.len())
            .map(|k| if bits >> k & 1 == 1 { '+' } else { '-' })
            .collect();
        s.extend(std::iter::repeat_n('+', self.n));
        s.extend(std::iter::repeat_n('-', self.n));
        s
    }

    /// A rational interior point off every wall: the barycenter when it is
    /// generic, otherwise a small perturbation of it.
    #[must_use]
    pub fn seed_point(&self) -> RationalPoint {
        let n = self.n;
        let bary = RationalPoint::barycenter(n);
        if self.bits_of(&bary).is_some() {
            return bary;
        }
        let total = (1i64 << n) - 1;
        let scale = 1000 * (1i64 << n) * n as i64;
        for attempt in 1..=64 {
            let coords = (0..n)
                .map(|i| rat(2, n as i64) + rat(attempt * ((1i64 << i) * n as i64 - total), scale))
                .collect();
            let p = RationalPoint::new(coords).expect("offsets sum to zero");
            if self.bits_of(&p).is_some() {
                return p;
            }
        }
        unreachable!("a generic perturbation exists")
    }
}

/// How the chamber graph is explored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// BFS over orbit representatives under relabeling, then expand orbits.
    Orbits,
    /// BFS over every chamber.
    Plain,
}

fn bfs(arr: &Arrangement, strategy: Strategy) -> BTreeMap<SumBits, RationalPoint> {
    let key = |b: SumBits| match strategy {
        Strategy::Orbits => arr.canonical(b),
        Strategy::Plain => b,
    };
    let seed = arr.seed_point();
    let seed_bits = arr.bits_of(&seed).expect("seed is generic");
    let seed_witness = arr.realize(seed_bits).expect("seed chamber is open");

    let mut found: BTreeMap<SumBits, (SumBits, RationalPoint)> = BTreeMap::new();
    let mut rejected: HashSet<SumBits> = HashSet::new();
    found.insert(key(seed_bits), (seed_bits, seed_witness));
    let mut frontier = vec![seed_bits];
    while !frontier.is_empty() {
        let mut candidates: BTreeMap<SumBits, SumBits> = BTreeMap::new();
        for &bits in &frontier {
            for k in 0..arr.sum_wall_count() {
                let flipped = bits ^ 1 << k;
                let kf = key(flipped);
                if !found.contains_key(&kf) && !rejected.contains(&kf) {
                    candidates.entry(kf).or_insert(flipped);
                }
            }
        }
        let list: Vec<(SumBits, SumBits)> = candidates.into_iter().collect();
        let realized = par::map(&list, |(_, bits)| arr.realize(*bits));
        frontier.clear();
        for ((kf, bits), witness) in list.into_iter().zip(realized) {
            match witness {
                Some(w) => {
                    found.insert(kf, (bits, w));
                    frontier.push(bits);
                }
                None => {
                    rejected.insert(kf);
                }
            }
        }
        log::debug!("chamber BFS: {} found, frontier {}", found.len(), frontier.len());
    }

    match strategy {
        Strategy::Plain => found.into_values().collect(),
        Strategy::Orbits => {
            let reps: Vec<(SumBits, RationalPoint)> = found.into_values().collect();
            let images = par::map(&reps, |(bits, w)| {
                (0..arr.perms.len())
                    .map(|p| (arr.act(p, *bits), w.permuted(arr.perms[p].images())))
                    .collect::<Vec<_>>()
            });
            let mut all = BTreeMap::new();
            for orbit in images {
                for (bits, w) in orbit {
                    all.entry(bits).or_insert(w);
                }
            }
            all
        }
    }
}

/// Full-dimensional admissible polytopes with their relative-interior systems.
pub struct OmegaOracle {
    pub n: usize,
    polys: Vec<AdmissiblePolytope>,
    systems: Vec<StrictSystem>,
}

impl OmegaOracle {
    pub fn new(n: usize) -> Result<Self> {
        let polys: Vec<AdmissiblePolytope> = enumerate_admissible_polytopes(n)?
            .into_iter()
            .filter(AdmissiblePolytope::is_full_dimensional)
            .collect();
        Ok(Self::from_polytopes(n, polys))
    }

    #[must_use]
    pub fn from_polytopes(n: usize, polys: Vec<AdmissiblePolytope>) -> Self {
        let systems = polys.iter().map(AdmissiblePolytope::strict_system).collect();
        Self { n, polys, systems }
    }

    #[must_use]
    pub fn polytopes(&self) -> &[AdmissiblePolytope] {
        &self.polys
    }

    /// Labels of the polytopes whose relative interior contains `x`.
    #[must_use]
    pub fn labels_at(&self, x: &RationalPoint) -> BTreeSet<SigmaLabel> {
        self.polys
            .iter()
            .zip(&self.systems)
            .filter(|(_, s)| s.satisfied_by(x))
            .map(|(p, _)| p.sigma_label.clone())
            .collect()
    }
}

/// The omega set of a full chamber, computed from its witness.
pub fn omega_of(
    chamber: &Chamber,
    oracle: &OmegaOracle,
) -> Result<BTreeSet<SigmaLabel>> {
    omega_at(&chamber.witness, oracle)
}

/// Omega set at a point; fails if the point lies on a wall.
pub fn omega_at(x: &RationalPoint, oracle: &OmegaOracle) -> Result<BTreeSet<SigmaLabel>> {
    let n = oracle.n;
    if x.dim() != n {
        return Err(Error::Dimension {
            expected: n,
            got: x.dim(),
        });
    }
    for w in walls(n)? {
        let s = w.sign_at(n, x);
        let outside = match w {
            Wall::SumEqOne(_) => s == Sign::Zero,
            Wall::CoordZero(_) => s != Sign::Pos,
            Wall::CoordOne(_) => s != Sign::Neg,
        };
        if outside {
            return Err(Error::NotFullDimensional(w.to_string()));
        }
    }
    Ok(oracle.labels_at(x))
}

fn finish(
    arr: &Arrangement,
    oracle: &OmegaOracle,
    raw: BTreeMap<SumBits, RationalPoint>,
) -> Vec<Chamber> {
    let items: Vec<(SumBits, RationalPoint)> = raw.into_iter().collect();
    let mut chambers = par::map(&items, |(bits, w)| Chamber {
        id: 0,
        signs: arr.signs_of_bits(*bits),
        witness: w.clone(),
        dim: arr.n - 1,
        boundary_flag: false,
        omega: oracle.labels_at(w),
    });
    chambers.sort_by(|a, b| a.signs.cmp(&b.signs));
    for (i, c) in chambers.iter_mut().enumerate() {
        c.id = i;
    }
    chambers
}

pub fn enumerate_full_chambers(n: usize) -> Result<Vec<Chamber>> {
    enumerate_with(n, Strategy::Orbits)
}

pub fn enumerate_with(n: usize, strategy: Strategy) -> Result<Vec<Chamber>> {
    let arr = Arrangement::new(n)?;
    let oracle = OmegaOracle::new(n)?;
    let raw = bfs(&arr, strategy);
    Ok(finish(&arr, &oracle, raw))
}

/// Every sum-wall sign pattern tested directly; only sensible for small `n`.
pub fn enumerate_exhaustive(n: usize) -> Result<Vec<Chamber>> {
    let arr = Arrangement::new(n)?;
    let oracle = OmegaOracle::new(n)?;
    let all: Vec<SumBits> = (0..1u64 << arr.sum_wall_count()).collect();
    let realized = par::map(&all, |b| arr.realize(*b));
    let raw = all
        .into_iter()
        .zip(realized)
        .filter_map(|(b, w)| w.map(|w| (b, w)))
        .collect();
    Ok(finish(&arr, &oracle, raw))
}

#[must_use]
pub fn adjacent(a: &Chamber, b: &Chamber) -> bool {
    a.signs.len() == b.signs.len()
        && a.signs
            .chars()
            .zip(b.signs.chars())
            .filter(|(x, y)| x != y)
            .count()
            == 1
}

/// A second interior point of the chamber, different from the stored witness
/// whenever the chamber allows it.
#[must_use]
pub fn alternate_witness(arr: &Arrangement, chamber: &Chamber) -> Option<RationalPoint> {
    let bits = arr.bits_of(&chamber.witness)?;
    let sys = arr.system(bits);
    let (_, slack) = sys.max_min_slack()?;
    let half = slack / int(2);
    let objective: Vec<i64> = (0..arr.n).map(|i| if i == 0 { 1 } else { 0 }).collect();
    sys.optimize_with_slack(&objective, &half)
}

#[derive(Serialize, Deserialize)]
struct CacheChamber {
    signs: String,
    witness: RationalPoint,
    omega: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: String,
    n: usize,
    walls: Vec<String>,
    chambers: Vec<CacheChamber>,
}

#[must_use]
pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("chambers-n{n}.json"))
}

pub fn chambers_to_json(n: usize, chambers: &[Chamber]) -> Result<String> {
    let file = CacheFile {
        schema: CHAMBER_SCHEMA.to_string(),
        n,
        walls: walls(n)?.iter().map(ToString::to_string).collect(),
        chambers: chambers
            .iter()
            .map(|c| CacheChamber {
                signs: c.signs.clone(),
                witness: c.witness.clone(),
                omega: c.omega.iter().map(ToString::to_string).collect(),
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&file)? + "\n")
}

pub fn write_cache(dir: &Path, n: usize, chambers: &[Chamber]) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = cache_path(dir, n);
    std::fs::write(&path, chambers_to_json(n, chambers)?)?;
    Ok(path)
}

/// Loads a cache file and re-checks up to 100 randomly chosen witnesses.
pub fn load_cache(dir: &Path, n: usize) -> Result<Vec<Chamber>> {
    let path = cache_path(dir, n);
    let shown = path.display().to_string();
    if !path.exists() {
        return Err(Error::CacheMissing { path: shown, n });
    }
    let invalid = |reason: String| Error::CacheInvalid {
        path: shown.clone(),
        reason,
    };
    let text = std::fs::read_to_string(&path)?;
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| invalid(e.to_string()))?;
    if file.schema != CHAMBER_SCHEMA {
        return Err(invalid(format!("schema {:?}", file.schema)));
    }
    if file.n != n {
        return Err(invalid(format!("n = {}", file.n)));
    }
    let expected: Vec<String> = walls(n)?.iter().map(ToString::to_string).collect();
    if file.walls != expected {
        return Err(invalid("wall list differs".into()));
    }
    let mut chambers = Vec::with_capacity(file.chambers.len());
    for (id, c) in file.chambers.into_iter().enumerate() {
        let omega = c
            .omega
            .iter()
            .map(|l| l.parse())
            .collect::<Result<BTreeSet<SigmaLabel>>>()
            .map_err(|e| invalid(e.to_string()))?;
        chambers.push(Chamber {
            id,
            signs: c.signs,
            witness: c.witness,
            dim: n - 1,
            boundary_flag: false,
            omega,
        });
    }
    if !chambers.windows(2).all(|w| w[0].signs < w[1].signs) {
        return Err(invalid("chambers not in canonical order".into()));
    }
    validate_sample(n, &chambers, 100).map_err(invalid)?;
    Ok(chambers)
}

/// Checks `count` seeded random chambers: witness realizes the sign string and omega matches.
pub fn validate_sample(n: usize, chambers: &[Chamber], count: usize) -> Result<(), String> {
    let arr = Arrangement::new(n).map_err(|e| e.to_string())?;
    let oracle = OmegaOracle::new(n).map_err(|e| e.to_string())?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(n as u64);
    let picks: Vec<usize> = sample(&mut rng, chambers.len(), count.min(chambers.len())).into_vec();
    let bad = par::map(&picks, |&i| {
        let c = &chambers[i];
        let signs = sign_string(&sign_vector(n, &arr.walls, &c.witness));
        if signs != c.signs {
            return Some(format!("chamber {i}: witness has signs {signs}"));
        }
        if oracle.labels_at(&c.witness) != c.omega {
            return Some(format!("chamber {i}: omega differs"));
        }
        None
    });
    match bad.into_iter().flatten().next() {
        Some(msg) => Err(msg),
        None => Ok(()),
    }
}

/// Loads from `dir` when allowed, otherwise enumerates (and writes the cache when a dir is given).
pub fn load_or_build(n: usize, dir: Option<&Path>, build: bool) -> Result<Vec<Chamber>> {
    if let Some(dir) = dir {
        match load_cache(dir, n) {
            Ok(c) => return Ok(c),
            Err(Error::CacheMissing { .. }) if build => {}
            Err(e) => return Err(e),
        }
    }
    let chambers = enumerate_full_chambers(n)?;
    if let Some(dir) = dir {
        let path = write_cache(dir, n, &chambers)?;
        log::info!("wrote {}", path.display());
    }
    Ok(chambers)
}

/// The chamber whose omega contains every label in `labels`.
#[must_use]
pub fn find_chamber<'a>(chambers: &'a [Chamber], labels: &[SigmaLabel]) -> Option<&'a Chamber> {
    chambers
        .iter()
        .find(|c| labels.iter().all(|l| c.omega.contains(l)))
}

/// The reference chamber: inside every `K{ij}` for n = 5, inside every `K{1ij}` for n = 6,
/// inside every `K{ij}` for n = 4.
#[must_use]
pub fn reference_labels(n: usize) -> Vec<SigmaLabel> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if n == 6 {
                if i == 1 {
                    for k in j + 1..=n {
                        out.push(SigmaLabel::single(&[1, j, k]));
                    }
                }
            } else {
                out.push(SigmaLabel::single(&[i, j]));
            }
        }
    }
    out
}

pub fn reference_chamber(chambers: &[Chamber], n: usize) -> Option<&Chamber> {
    find_chamber(chambers, &reference_labels(n))
}
