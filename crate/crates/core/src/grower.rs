//! Families of pairwise fertile rays and their growth one dimension up.
//!
//! Composing every ordered pair of an `m`-member pairwise fertile family of
//! indecomposable deformed `n`-permutahedra gives `m²` pairwise fertile,
//! pairwise normally inequivalent indecomposables on `n + 1` elements.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::SetFunctionDoc;
use crate::seeds::{compose_members, fertile_profiles, FertilityProfile, Member};
use crate::submod::{SetFunction, TightTriple};

/// Largest ground set verified exhaustively by default.
pub const FULL_VERIFY_MAX_N: usize = 5;
pub const DEFAULT_SAMPLE: usize = 10_000;
pub const DEFAULT_CERTIFY_SAMPLE: usize = 100;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Where a member came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Axiom,
    /// Composed from members of the previous level, `top` fertile over `bottom`.
    Pair { top: usize, bottom: usize },
}

impl Serialize for Provenance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Provenance::Axiom => s.serialize_str("axiom"),
            Provenance::Pair { top, bottom } => [top, bottom].serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Provenance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Tag(String),
            Pair([usize; 2]),
        }
        match Repr::deserialize(d)? {
            Repr::Tag(t) if t == "axiom" => Ok(Provenance::Axiom),
            Repr::Tag(t) => Err(serde::de::Error::custom(format!("unknown provenance {t:?}"))),
            Repr::Pair([top, bottom]) => Ok(Provenance::Pair { top, bottom }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Full,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Exhaustive checks regardless of `n`.
    pub full: bool,
    /// Ordered pairs tested for fertility in sampled mode.
    pub sample: usize,
    /// Members certified indecomposable in sampled mode.
    pub certify_sample: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            full: false,
            sample: DEFAULT_SAMPLE,
            certify_sample: DEFAULT_CERTIFY_SAMPLE,
            seed: DEFAULT_SEED,
        }
    }
}

impl VerifyOptions {
    fn mode(&self, n: usize) -> Mode {
        if self.full || n <= FULL_VERIFY_MAX_N {
            Mode::Full
        } else {
            Mode::Sampled
        }
    }
}

/// Outcome of the four family checks. Empty failure lists mean a pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub size: usize,
    pub mode: Mode,
    pub seed: Option<u64>,
    /// (a) members that are not submodular.
    pub invalid: Vec<usize>,
    /// (b) members with their deformation-cone dimension, when not `n + 1`.
    pub decomposable: Vec<(usize, usize)>,
    /// (c) pairs with identical tight sets.
    pub equivalent: Vec<(usize, usize)>,
    /// (d) ordered pairs without a seed.
    pub infertile: Vec<(usize, usize)>,
    pub certified: usize,
    pub fertility_pairs: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.invalid.is_empty()
            && self.decomposable.is_empty()
            && self.equivalent.is_empty()
            && self.infertile.is_empty()
    }

    fn covers(&self, opts: &VerifyOptions) -> bool {
        match opts.mode(self.n) {
            Mode::Full => self.mode == Mode::Full,
            Mode::Sampled => self.mode == Mode::Full || self.seed == Some(opts.seed),
        }
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family of {} members on n = {} ({:?} verification)", self.size, self.n, self.mode)?;
        writeln!(f, "  (a) valid deformed permutahedra: {} ({} failures)", mark(self.invalid.is_empty()), self.invalid.len())?;
        writeln!(
            f,
            "  (b) indecomposable: {} ({} certified, {} failures)",
            mark(self.decomposable.is_empty()),
            self.certified,
            self.decomposable.len()
        )?;
        writeln!(
            f,
            "  (c) pairwise normally inequivalent: {} ({} collisions)",
            mark(self.equivalent.is_empty()),
            self.equivalent.len()
        )?;
        write!(
            f,
            "  (d) pairwise fertile: {} ({} ordered pairs, {} failures)",
            mark(self.infertile.is_empty()),
            self.fertility_pairs,
            self.infertile.len()
        )?;
        if let Some(&(u, v)) = self.infertile.first() {
            write!(f, "\n      first infertile pair: ({}, {})", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// Members on a common ground set with their origin and last verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub n: usize,
    pub members: Vec<SetFunction>,
    pub provenance: Vec<Provenance>,
    pub verdicts: Option<VerifyReport>,
}

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    n: usize,
    members: Vec<SetFunctionDoc>,
    provenance: Vec<Provenance>,
    #[serde(default)]
    verdicts: Option<VerifyReport>,
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyDoc {
            n: self.n,
            members: self.members.iter().map(SetFunctionDoc::from).collect(),
            provenance: self.provenance.clone(),
            verdicts: self.verdicts.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = FamilyDoc::deserialize(d)?;
        let members = doc
            .members
            .into_iter()
            .map(SetFunctionDoc::into_set_function)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Family::with_provenance(doc.n, members, doc.provenance)
            .map(|mut f| {
                f.verdicts = doc.verdicts;
                f
            })
            .map_err(D::Error::custom)
    }
}

impl Family {
    pub fn axioms(members: Vec<SetFunction>) -> Result<Self> {
        let n = members.first().map_or(0, SetFunction::n);
        let provenance = vec![Provenance::Axiom; members.len()];
        Family::with_provenance(n, members, provenance)
    }

    pub fn with_provenance(n: usize, members: Vec<SetFunction>, provenance: Vec<Provenance>) -> Result<Self> {
        if let Some(f) = members.iter().find(|f| f.n() != n) {
            return Err(Error::DimensionMismatch(n, f.n()));
        }
        if provenance.len() != members.len() {
            return Err(Error::Input("one provenance entry per member is required".into()));
        }
        Ok(Family {
            n,
            members,
            provenance,
            verdicts: None,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn tight_sets(members: &[SetFunction]) -> Vec<Vec<TightTriple>> {
    members.par_iter().map(SetFunction::tight_set).collect()
}

/// Pairs of members sharing a tight set.
fn collisions(tight: &[Vec<TightTriple>]) -> Vec<(usize, usize)> {
    let mut first: HashMap<&[TightTriple], usize> = HashMap::new();
    let mut out = Vec::new();
    for (i, t) in tight.iter().enumerate() {
        match first.get(t.as_slice()) {
            Some(&j) => out.push((j, i)),
            None => {
                first.insert(t, i);
            }
        }
    }
    out
}

fn profile(f: &SetFunction) -> Result<FertilityProfile> {
    Ok(FertilityProfile::new(&f.vertex_table()?))
}

/// Runs checks (a)–(d); exhaustive for `n ≤ 5` or `opts.full`, otherwise on
/// seeded random samples of members and ordered pairs.
pub fn verify_family(family: &Family, opts: &VerifyOptions) -> Result<VerifyReport> {
    let m = family.len();
    let n = family.n;
    let mode = opts.mode(n);
    let members = &family.members;

    let invalid: Vec<usize> = (0..m)
        .into_par_iter()
        .filter(|&i| !members[i].is_submodular())
        .collect();
    let valid = |i: &usize| !invalid.contains(i);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let to_certify: Vec<usize> = match mode {
        Mode::Full => (0..m).filter(valid).collect(),
        Mode::Sampled => {
            let mut idx = sample(&mut rng, m, opts.certify_sample.min(m)).into_vec();
            idx.sort_unstable();
            idx.retain(valid);
            idx
        }
    };
    let decomposable: Vec<(usize, usize)> = to_certify
        .par_iter()
        .filter_map(|&i| {
            let f = &members[i];
            let dim = f.defo_dim();
            (dim != n + 1 || f.is_modular()).then_some((i, dim))
        })
        .collect();

    let valid_members: Vec<usize> = (0..m).filter(valid).collect();
    let tight = tight_sets(members);
    let equivalent: Vec<(usize, usize)> = collisions(
        &valid_members.iter().map(|&i| tight[i].clone()).collect::<Vec<_>>(),
    )
    .into_iter()
    .map(|(a, b)| (valid_members[a], valid_members[b]))
    .collect();

    let pairs: Vec<(usize, usize)> = match mode {
        Mode::Full => valid_members
            .iter()
            .flat_map(|&u| valid_members.iter().map(move |&v| (u, v)))
            .filter(|(u, v)| u != v)
            .collect(),
        Mode::Sampled if valid_members.len() >= 2 => (0..opts.sample)
            .map(|_| {
                let u = valid_members[rng.gen_range(0..valid_members.len())];
                loop {
                    let v = valid_members[rng.gen_range(0..valid_members.len())];
                    if v != u {
                        break (u, v);
                    }
                }
            })
            .collect(),
        Mode::Sampled => Vec::new(),
    };
    let mut needed: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    needed.sort_unstable();
    needed.dedup();
    let profiles: HashMap<usize, FertilityProfile> = needed
        .par_iter()
        .map(|&i| Ok((i, profile(&members[i])?)))
        .collect::<Result<_>>()?;
    let infertile: Vec<(usize, usize)> = pairs
        .par_iter()
        .map(|&(u, v)| Ok((!fertile_profiles(&profiles[&u], &profiles[&v])?).then_some((u, v))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    Ok(VerifyReport {
        n,
        size: m,
        mode,
        seed: (mode == Mode::Sampled).then_some(opts.seed),
        invalid,
        decomposable,
        equivalent,
        infertile,
        certified: to_certify.len(),
        fertility_pairs: pairs.len(),
    })
}

/// Stored verdicts when they cover `opts`, otherwise a fresh verification.
pub fn verify_family_cached(family: &mut Family, opts: &VerifyOptions) -> Result<VerifyReport> {
    if let Some(r) = &family.verdicts {
        if r.covers(opts) && r.size == family.len() {
            return Ok(r.clone());
        }
    }
    let report = verify_family(family, opts)?;
    family.verdicts = Some(report.clone());
    Ok(report)
}

/// All `m²` compositions, member `i·m + j` composed from top `i` over
/// bottom `j`, followed by verification of the result.
pub fn grow_once(family: &mut Family, opts: &VerifyOptions) -> Result<Family> {
    let report = verify_family_cached(family, opts)?;
    if !report.passed() {
        return Err(Error::Input(format!("family does not verify:\n{report}")));
    }
    let parents: Vec<Member> = family
        .members
        .par_iter()
        .map(|f| Member::new(f.clone()))
        .collect::<Result<_>>()?;
    let m = parents.len();
    let members: Vec<SetFunction> = (0..m * m)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / m, k % m);
            compose_members(&parents[i], &parents[j])
                .map(|c| c.lifted)
                .map_err(|e| Error::Internal(format!("composing ({}, {}) failed: {e}", i + 1, j + 1)))
        })
        .collect::<Result<_>>()?;
    let provenance = (0..m * m)
        .map(|k| Provenance::Pair {
            top: k / m,
            bottom: k % m,
        })
        .collect();
    if let Some(&(a, b)) = collisions(&tight_sets(&members)).first() {
        return Err(Error::Internal(format!(
            "composed members {} and {} are normally equivalent",
            a + 1,
            b + 1
        )));
    }
    let mut grown = Family::with_provenance(family.n + 1, members, provenance)?;
    let report = verify_family(&grown, opts)?;
    if !report.passed() {
        return Err(Error::Internal(format!("grown family fails verification:\n{report}")));
    }
    grown.verdicts = Some(report);
    Ok(grown)
}

/// How a member arises from the axioms of the first level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Lineage {
    Axiom(usize),
    Pair(Box<Lineage>, Box<Lineage>),
}

impl fmt::Display for Lineage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lineage::Axiom(i) => write!(f, "{}", i + 1),
            Lineage::Pair(a, b) => write!(f, "({a} ⊻ {b})"),
        }
    }
}

/// Follows provenance from `levels[level].members[index]` back to axioms.
pub fn lineage(levels: &[Family], level: usize, index: usize) -> Result<Lineage> {
    let fam = levels
        .get(level)
        .ok_or_else(|| Error::Input(format!("no level {level}")))?;
    match fam.provenance.get(index) {
        None => Err(Error::Input(format!("no member {index} at level {level}"))),
        Some(Provenance::Axiom) => Ok(Lineage::Axiom(index)),
        Some(&Provenance::Pair { top, bottom }) if level > 0 => Ok(Lineage::Pair(
            Box::new(lineage(levels, level - 1, top)?),
            Box::new(lineage(levels, level - 1, bottom)?),
        )),
        Some(_) => Err(Error::Input("composed member on the first level".into())),
    }
}

/// Maximal set of members fertile in both directions with each other,
/// chosen greedily by descending mutual degree (ties by index).
pub fn greedy_mutual_clique(members: &[SetFunction]) -> Result<Family> {
    let m = members.len();
    if m == 0 {
        return Ok(Family {
            n: 0,
            members: Vec::new(),
            provenance: Vec::new(),
            verdicts: None,
        });
    }
    let parsed: Vec<Member> = members
        .par_iter()
        .map(|f| Member::new(f.clone()))
        .collect::<Result<_>>()?;
    if let Some(p) = parsed.iter().find(|p| p.n() != parsed[0].n()) {
        return Err(Error::DimensionMismatch(parsed[0].n(), p.n()));
    }
    let fertile: Vec<Vec<bool>> = (0..m)
        .into_par_iter()
        .map(|u| {
            (0..m)
                .map(|v| fertile_profiles(parsed[u].profile(), parsed[v].profile()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mutual = |u: usize, v: usize| fertile[u][v] && fertile[v][u];
    let degree: Vec<usize> = (0..m).map(|u| (0..m).filter(|&v| v != u && mutual(u, v)).count()).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
    let mut clique: Vec<usize> = Vec::new();
    for u in order {
        if clique.iter().all(|&v| mutual(u, v)) {
            clique.push(u);
        }
    }
    clique.sort_unstable();
    Family::axioms(clique.into_iter().map(|i| members[i].clone()).collect())
}

/// Sandwich check for the lower bound `p^(2^(n−k))` on the number of rays.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub p: u64,
    pub n: usize,
    /// `p^(2^(n−k))`, `2^(2^(n−2))` and `n^(2^n)` as decimal strings, for `n ≤ 12`.
    pub lower: Option<String>,
    pub double_exponential: Option<String>,
    pub upper: Option<String>,
    /// `log₂ log₂` of the three quantities.
    pub loglog_lower: f64,
    pub loglog_double_exponential: f64,
    pub loglog_upper: f64,
    /// `p^(2^(n−k)) ≥ 2^(2^(n−2))`.
    pub above_double_exponential: bool,
    /// `p^(2^(n−k)) ≤ n^(2^n)`.
    pub below_upper: bool,
}

pub const BOUND_PRINT_MAX_N: usize = 12;

fn pow2(e: usize) -> Result<u32> {
    u32::try_from(e)
        .ok()
        .and_then(|e| 1u32.checked_shl(e))
        .ok_or_else(|| Error::Guard(format!("exponent 2^{e} too large")))
}

pub fn bound_report(k: usize, p: u64, n: usize) -> Result<BoundReport> {
    if p == 0 {
        return Err(Error::Input("family size must be at least 1".into()));
    }
    if k < 2 || n < k {
        return Err(Error::Input(format!("need 2 ≤ k ≤ n, got k = {k}, n = {n}")));
    }
    if k > 20 {
        return Err(Error::Guard(format!("k = {k} too large")));
    }
    // taking 2^(n−k)-th roots reduces both comparisons to level k
    let pb = BigUint::from(p);
    let above = pb >= BigUint::from(2u32).pow(pow2(k - 2)?);
    let below = pb <= BigUint::from(n).pow(pow2(k)?);

    let exact = if n <= BOUND_PRINT_MAX_N {
        let lower = pb.clone().pow(pow2(n - k)?);
        let dexp = BigUint::one() << pow2(n - 2)?;
        let upper = BigUint::from(n).pow(pow2(n)?);
        if (lower >= dexp) != above || (lower <= upper) != below {
            return Err(Error::Internal("root reduction disagrees with direct comparison".into()));
        }
        Some((lower.to_string(), dexp.to_string(), upper.to_string()))
    } else {
        None
    };
    let (lower, dexp, upper) = match exact {
        Some((a, b, c)) => (Some(a), Some(b), Some(c)),
        None => (None, None, None),
    };
    Ok(BoundReport {
        k,
        p,
        n,
        lower,
        double_exponential: dexp,
        upper,
        loglog_lower: (n - k) as f64 + (p as f64).log2().log2(),
        loglog_double_exponential: (n - 2) as f64,
        loglog_upper: n as f64 + (n as f64).log2().log2(),
        above_double_exponential: above,
        below_upper: below,
    })
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.n - self.k;
        writeln!(f, "n = {}: t_n ≥ {}^(2^{e})", self.n, self.p)?;
        if let Some(l) = &self.lower {
            writeln!(f, "  lower bound            = {l}")?;
        }
        writeln!(
            f,
            "  ≥ 2^(2^{}): {}{}",
            self.n - 2,
            self.above_double_exponential,
            if self.above_double_exponential {
                ""
            } else {
                " (this chain does not reach the double exponential bound)"
            }
        )?;
        write!(f, "  ≤ {}^(2^{}): {}", self.n, self.n, self.below_upper)
    }
}
