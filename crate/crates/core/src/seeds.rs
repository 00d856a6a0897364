//! Seeds, fertility and composition of indecomposable deformed permutahedra.
//!
//! For a pair `(P, Q)` on the same ground set, `φ(λ, μ)_i = min_σ (λP^σ_i −
//! μQ^σ_i)`. With `μ = 1`, each coordinate of `φ` is the lower envelope of the
//! lines `λ ↦ λP^σ_i − Q^σ_i`; its strictly positive breakpoints are the seeds.
//! A pair with at least one seed is fertile, and composing it at the smallest
//! seed `λ∘` yields an indecomposable deformed `(n+1)`-permutahedron whose top
//! and bottom faces are normally equivalent to `P` and `Q`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::polymat::QuotientPair;
use crate::submod::{RayCertificate, SetFunction, TightTriple, VertexTable};

fn same_n(p: &SetFunction, q: &SetFunction) -> Result<usize> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(p.n(), q.n()));
    }
    Ok(p.n())
}

fn phi_from_tables(p: &VertexTable, q: &VertexTable, lambda: &Rat, mu: &Rat) -> Vec<Rat> {
    (0..p.n())
        .map(|i| {
            p.coordinate(i)
                .zip(q.coordinate(i))
                .map(|(a, b)| lambda * a - mu * b)
                .min()
                .expect("at least one permutation")
        })
        .collect()
}

/// `φ(λ, μ)` for the pair `(P, Q)`.
pub fn phi(p: &SetFunction, q: &SetFunction, lambda: &Rat, mu: &Rat) -> Result<Vec<Rat>> {
    same_n(p, q)?;
    for x in [lambda, mu] {
        if x.is_negative() {
            return Err(Error::NegativeDilation(x.clone()));
        }
    }
    Ok(phi_from_tables(&p.vertex_table()?, &q.vertex_table()?, lambda, mu))
}

/// Memoized evaluation of `φ` for a fixed pair.
#[derive(Debug)]
pub struct PhiMap {
    p: VertexTable,
    q: VertexTable,
    cache: HashMap<(Rat, Rat), Vec<Rat>>,
}

impl PhiMap {
    pub fn new(p: &SetFunction, q: &SetFunction) -> Result<Self> {
        same_n(p, q)?;
        Ok(PhiMap {
            p: p.vertex_table()?,
            q: q.vertex_table()?,
            cache: HashMap::new(),
        })
    }

    pub fn eval(&mut self, lambda: &Rat, mu: &Rat) -> Result<&[Rat]> {
        for x in [lambda, mu] {
            if x.is_negative() {
                return Err(Error::NegativeDilation(x.clone()));
            }
        }
        let (p, q) = (&self.p, &self.q);
        Ok(self
            .cache
            .entry((lambda.clone(), mu.clone()))
            .or_insert_with(|| phi_from_tables(p, q, lambda, mu)))
    }
}

/// A line `λ ↦ slope·λ − offset`, i.e. the pair `(P^σ_j, Q^σ_j)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub slope: Rat,
    pub offset: Rat,
}

impl Line {
    fn meet(&self, other: &Line) -> Rat {
        (&self.offset - &other.offset) / (&self.slope - &other.slope)
    }
}

/// Distinct `(P^σ_j, Q^σ_j)` pairs for coordinate `j`, sorted.
fn coordinate_lines(p: &VertexTable, q: &VertexTable, j: usize) -> Vec<Line> {
    let mut lines: Vec<Line> = p
        .coordinate(j)
        .zip(q.coordinate(j))
        .map(|(a, b)| Line {
            slope: a.clone(),
            offset: b.clone(),
        })
        .collect();
    lines.sort();
    lines.dedup();
    lines
}

/// Breakpoints of the lower envelope of `lines` over all of `R`, ascending.
pub fn envelope_breakpoints(lines: &[Line]) -> Vec<Rat> {
    // for each slope only the largest offset can reach the minimum
    let mut best: Vec<&Line> = Vec::new();
    let mut sorted: Vec<&Line> = lines.iter().collect();
    sorted.sort_by(|a, b| b.slope.cmp(&a.slope).then(b.offset.cmp(&a.offset)));
    for l in sorted {
        if best.last().is_some_and(|m| m.slope == l.slope) {
            continue;
        }
        best.push(l);
    }
    // slopes descend, so the envelope is traversed left to right
    let mut hull: Vec<&Line> = Vec::new();
    for l in best {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            if a.meet(l) <= a.meet(b) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(l);
    }
    hull.windows(2).map(|w| w[0].meet(w[1])).collect()
}

fn positive(breaks: Vec<Rat>) -> Vec<Rat> {
    breaks.into_iter().filter(Rat::is_positive).collect()
}

/// Strictly positive envelope breakpoints of `λ ↦ φ(λ, 1)_j`.
pub fn seed_breakpoints(p: &SetFunction, q: &SetFunction, j: usize) -> Result<Vec<Rat>> {
    let n = same_n(p, q)?;
    if j >= n {
        return Err(Error::Input(format!("coordinate {} outside [{n}]", j + 1)));
    }
    let (pt, qt) = (p.vertex_table()?, q.vertex_table()?);
    Ok(positive(envelope_breakpoints(&coordinate_lines(&pt, &qt, j))))
}

/// Per-coordinate envelope data for a pair, normalized to `μ = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedReport {
    pub n: usize,
    pub lines: Vec<Vec<Line>>,
    pub breakpoints: Vec<Vec<Rat>>,
    pub fertile: bool,
    pub lambda_min: Option<Rat>,
    /// 1-based coordinates at which `lambda_min` is a breakpoint.
    pub witnesses: Vec<usize>,
}

impl SeedReport {
    fn from_tables(p: &VertexTable, q: &VertexTable) -> Self {
        let n = p.n();
        let lines: Vec<Vec<Line>> = (0..n).map(|j| coordinate_lines(p, q, j)).collect();
        let breakpoints: Vec<Vec<Rat>> = lines
            .iter()
            .map(|l| positive(envelope_breakpoints(l)))
            .collect();
        let lambda_min = breakpoints.iter().filter_map(|b| b.first()).min().cloned();
        let witnesses = match &lambda_min {
            Some(l) => (0..n).filter(|&j| breakpoints[j].contains(l)).map(|j| j + 1).collect(),
            None => Vec::new(),
        };
        SeedReport {
            n,
            lines,
            breakpoints,
            fertile: lambda_min.is_some(),
            lambda_min,
            witnesses,
        }
    }
}

pub fn seed_report(p: &SetFunction, q: &SetFunction) -> Result<SeedReport> {
    same_n(p, q)?;
    Ok(SeedReport::from_tables(&p.vertex_table()?, &q.vertex_table()?))
}

/// Argmin and argmax sets of every coordinate over the permutations, as
/// bitsets indexed by lexicographic permutation rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FertilityProfile {
    n: usize,
    argmin: Vec<Vec<u64>>,
    argmax: Vec<Vec<u64>>,
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

impl FertilityProfile {
    pub fn new(table: &VertexTable) -> Self {
        let words = table.len().div_ceil(64);
        let mask_of = |i: usize, target: &Rat| {
            let mut bits = vec![0u64; words];
            for (k, x) in table.coordinate(i).enumerate() {
                if x == target {
                    bits[k / 64] |= 1 << (k % 64);
                }
            }
            bits
        };
        let (mut argmin, mut argmax) = (Vec::new(), Vec::new());
        for i in 0..table.n() {
            let lo = table.coordinate(i).min().expect("nonempty").clone();
            let hi = table.coordinate(i).max().expect("nonempty").clone();
            argmin.push(mask_of(i, &lo));
            argmax.push(mask_of(i, &hi));
        }
        FertilityProfile {
            n: table.n(),
            argmin,
            argmax,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Fertile iff some coordinate has `argmin P ∩ argmax Q = ∅`.
    pub fn fertile_with(&self, q: &FertilityProfile) -> bool {
        (0..self.n).any(|i| disjoint(&self.argmin[i], &q.argmax[i]))
    }

    /// Some permutation maximizes coordinate `i` in both, for every `i`.
    pub fn shares_maximizers(&self, q: &FertilityProfile) -> bool {
        (0..self.n).all(|i| !disjoint(&self.argmax[i], &q.argmax[i]))
    }
}

/// An indecomposable non-point with its precomputed tables.
#[derive(Clone, Debug)]
pub struct Member {
    f: SetFunction,
    table: VertexTable,
    profile: FertilityProfile,
    certificate: RayCertificate,
}

impl Member {
    pub fn new(f: SetFunction) -> Result<Self> {
        let certificate = match f.is_indecomposable() {
            Ok(c) if c.indecomposable => c,
            Ok(c) => {
                return Err(Error::NotIndecomposable(format!(
                    "deformation cone has dimension {}, not {}",
                    c.defo_dim,
                    f.n() + 1
                )))
            }
            Err(Error::PointPolytope) => return Err(Error::NotIndecomposable("point polytope".into())),
            Err(e) => return Err(e),
        };
        let table = f.vertex_table()?;
        let profile = FertilityProfile::new(&table);
        Ok(Member {
            f,
            table,
            profile,
            certificate,
        })
    }

    pub fn function(&self) -> &SetFunction {
        &self.f
    }

    pub fn table(&self) -> &VertexTable {
        &self.table
    }

    pub fn profile(&self) -> &FertilityProfile {
        &self.profile
    }

    pub fn tight(&self) -> &[TightTriple] {
        &self.certificate.tight
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }
}

/// Fertility of `(P, Q)` by the argmin/argmax test.
///
/// Also asserts that the two always share a maximizer per coordinate.
pub fn fertile_members(p: &Member, q: &Member) -> Result<bool> {
    fertile_profiles(&p.profile, &q.profile)
}

/// [`fertile_members`] on bare profiles.
pub fn fertile_profiles(p: &FertilityProfile, q: &FertilityProfile) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(p.n(), q.n()));
    }
    if !p.shares_maximizers(q) {
        return Err(Error::Internal("no common maximizer for some coordinate".into()));
    }
    Ok(p.fertile_with(q))
}

/// Whether `(P, Q)` has a seed, decided by the argmin/argmax test and
/// confirmed against the envelope breakpoints.
pub fn is_fertile(p: &SetFunction, q: &SetFunction) -> Result<bool> {
    same_n(p, q)?;
    let (pm, qm) = (Member::new(p.clone())?, Member::new(q.clone())?);
    let fast = fertile_members(&pm, &qm)?;
    let slow = SeedReport::from_tables(&pm.table, &qm.table).fertile;
    if fast != slow {
        return Err(Error::Internal(format!(
            "fertility tests disagree: argmin/argmax says {fast}, envelope says {slow}"
        )));
    }
    Ok(fast)
}

/// `(λ∘, 1)`, the seed with smallest `λ`.
pub fn min_seed(p: &SetFunction, q: &SetFunction) -> Result<(Rat, Rat)> {
    match seed_report(p, q)?.lambda_min {
        Some(l) => Ok((l, Rat::one())),
        None => Err(Error::NoSeed),
    }
}

/// Checks run on every composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComposeCertificate {
    pub submodular: bool,
    pub defo_dim: usize,
    pub indecomposable: bool,
    pub top_equivalent: bool,
    pub bottom_equivalent: bool,
}

impl ComposeCertificate {
    pub fn holds(&self) -> bool {
        self.submodular && self.indecomposable && self.top_equivalent && self.bottom_equivalent
    }
}

/// `(λ∘P) ⊻ (Q + φ(λ∘, 1))`, lifted to `[n+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Composed {
    pub lifted: SetFunction,
    pub lambda: Rat,
    pub phi: Vec<Rat>,
    pub certificate: ComposeCertificate,
}

pub fn compose_members(p: &Member, q: &Member) -> Result<Composed> {
    if !fertile_members(p, q)? {
        return Err(Error::NoSeed);
    }
    let report = SeedReport::from_tables(&p.table, &q.table);
    let lambda = report
        .lambda_min
        .ok_or_else(|| Error::Internal("fertile pair without a positive breakpoint".into()))?;
    let phi = phi_from_tables(&p.table, &q.table, &lambda, &Rat::one());
    let pair = QuotientPair::new(p.f.dilate(&lambda)?, q.f.translate(&phi)?)
        .map_err(|e| Error::Internal(format!("seed translate is not a quotient: {e}")))?;
    let gp = pair.gp_sum();
    let lifted = gp.lifted();
    let submodular = lifted.is_submodular();
    let (defo_dim, indecomposable) = if submodular {
        match lifted.is_indecomposable() {
            Ok(c) => (c.defo_dim, c.indecomposable),
            Err(Error::PointPolytope) => (0, false),
            Err(e) => return Err(e),
        }
    } else {
        (0, false)
    };
    let certificate = ComposeCertificate {
        submodular,
        defo_dim,
        indecomposable,
        top_equivalent: gp.top_face().tight_set() == p.tight(),
        bottom_equivalent: gp.bottom_face().tight_set() == q.tight(),
    };
    if !certificate.holds() {
        return Err(Error::Internal(format!("composition certificate failed: {certificate:?}")));
    }
    Ok(Composed {
        lifted: gp.into_lifted(),
        lambda,
        phi,
        certificate,
    })
}

/// Composes a fertile pair of indecomposables at its smallest seed.
pub fn compose(p: &SetFunction, q: &SetFunction) -> Result<Composed> {
    same_n(p, q)?;
    compose_members(&Member::new(p.clone())?, &Member::new(q.clone())?)
}

/// Ordered fertile pairs `u → v` with `u ≠ v`, as 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FertilityGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl FertilityGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.vertices * self.vertices.saturating_sub(1)
    }
}

pub fn fertility_graph_members(members: &[Member]) -> Result<FertilityGraph> {
    let m = members.len();
    let rows: Vec<Vec<(usize, usize)>> = (0..m)
        .into_par_iter()
        .map(|u| {
            let mut row = Vec::new();
            for v in 0..m {
                if u != v && fertile_members(&members[u], &members[v])? {
                    row.push((u, v));
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(FertilityGraph {
        vertices: m,
        edges: rows.into_iter().flatten().collect(),
    })
}

pub fn fertility_graph(family: &[SetFunction]) -> Result<FertilityGraph> {
    let members: Vec<Member> = family
        .par_iter()
        .map(|f| Member::new(f.clone()))
        .collect::<Result<_>>()?;
    if let Some(m) = members.iter().find(|m| m.n() != members[0].n()) {
        return Err(Error::DimensionMismatch(members[0].n(), m.n()));
    }
    fertility_graph_members(&members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from(x)).collect()
    }

    #[test]
    fn phi_examples() {
        let (s1, t1, t2) = (fixtures::s1(), fixtures::t1(), fixtures::t2());
        assert_eq!(phi(&s1, &t1, &r("1"), &r("1")).unwrap(), rv(&[0, -1, -1]));
        assert_eq!(phi(&t2, &t1, &r("1"), &r("1")).unwrap(), rv(&[-1, -1, -1]));
        assert_eq!(phi(&t2, &t1, &r("0"), &r("0")).unwrap(), rv(&[0, 0, 0]));
        assert!(phi(&t2, &t1, &r("-1"), &r("1")).is_err());
        let mut map = PhiMap::new(&s1, &t1).unwrap();
        assert_eq!(map.eval(&r("1"), &r("1")).unwrap(), rv(&[0, -1, -1]).as_slice());
    }

    #[test]
    fn phi_table_fixture() {
        let table = fixtures::n3_phi_table();
        for e in &table.entries {
            let got = phi(&fixtures::n3_named(&e.top), &fixtures::n3_named(&e.bottom), &table.lambda, &table.mu);
            assert_eq!(got.unwrap(), e.phi, "{} {}", e.top, e.bottom);
        }
    }

    #[test]
    fn envelope_examples() {
        let l = |a: i64, b: i64| Line {
            slope: Rat::from(a),
            offset: Rat::from(b),
        };
        assert_eq!(envelope_breakpoints(&[l(0, 0), l(1, 1)]), vec![r("1")]);
        assert_eq!(envelope_breakpoints(&[l(0, 0), l(0, 1), l(2, 1), l(1, 0)]), vec![r("0")]);
        assert_eq!(envelope_breakpoints(&[l(0, 0), l(2, 1), l(1, 0)]), vec![r("1/2")]);
        assert!(envelope_breakpoints(&[l(3, 2)]).is_empty());
        assert_eq!(
            envelope_breakpoints(&[l(0, 0), l(1, 3), l(2, 5), l(3, 6)]),
            vec![r("1"), r("2"), r("3")]
        );
    }

    #[test]
    fn breakpoint_examples() {
        let (s1, t1) = (fixtures::s1(), fixtures::t1());
        let all: Vec<Vec<Rat>> = (0..3).map(|j| seed_breakpoints(&s1, &t1, j).unwrap()).collect();
        assert!(all.iter().any(|b| b == &vec![r("1")]));
        assert!(all.iter().flatten().all(|x| x == &r("1")));
        assert!((0..3).all(|j| seed_breakpoints(&t1, &s1, j).unwrap().is_empty()));
        for (_, p) in fixtures::n3_indecomposables() {
            let table = p.vertex_table().unwrap();
            for j in 0..3 {
                let distinct = table.coordinate(j).collect::<std::collections::BTreeSet<_>>().len();
                let b = seed_breakpoints(&p, &p, j).unwrap();
                assert_eq!(b.contains(&r("1")), distinct > 1);
            }
        }
    }

    #[test]
    fn fertility_examples() {
        let names = ["S1", "S2", "S3", "T1", "T2"];
        let digraph = fixtures::n3_fertility_digraph();
        for a in names {
            for b in names {
                let expected = a == b || digraph.edges.iter().any(|(u, v)| u == a && v == b);
                let got = is_fertile(&fixtures::n3_named(a), &fixtures::n3_named(b)).unwrap();
                assert_eq!(got, expected, "({a}, {b})");
            }
        }
        let pi = SetFunction::permutahedron(3);
        assert!(matches!(is_fertile(&pi, &fixtures::t1()), Err(Error::NotIndecomposable(_))));
    }

    #[test]
    fn min_seed_examples() {
        let (s1, t1) = (fixtures::s1(), fixtures::t1());
        assert_eq!(min_seed(&s1, &t1).unwrap(), (r("1"), r("1")));
        for (_, p) in fixtures::n3_indecomposables() {
            assert_eq!(min_seed(&p, &p).unwrap(), (r("1"), r("1")));
        }
        assert_eq!(min_seed(&s1.dilate(&r("2")).unwrap(), &t1).unwrap(), (r("1/2"), r("1")));
        assert!(matches!(min_seed(&t1, &s1), Err(Error::NoSeed)));
    }

    #[test]
    fn compose_examples() {
        for c in fixtures::n3_compositions() {
            let out = compose(&fixtures::n3_named(&c.top), &fixtures::n3_named(&c.bottom)).unwrap();
            assert_eq!(out.phi, c.bottom_shift, "{}", c.name);
            let mut expected = c.vertices.clone();
            expected.sort();
            assert_eq!(out.lifted.vertex_table().unwrap().distinct(), expected.as_slice(), "{}", c.name);
            assert_eq!(out.certificate.defo_dim, 5);
        }
        for (_, p) in fixtures::n3_indecomposables() {
            let out = compose(&p, &p).unwrap();
            assert_eq!(out.lambda, r("1"));
            assert!(out.phi.iter().all(Rat::is_zero));
            let lifted: Vec<_> = p
                .vertex_table()
                .unwrap()
                .distinct()
                .iter()
                .map(|v| crate::polymat::lift_point(v))
                .collect();
            assert_eq!(out.lifted.vertex_table().unwrap().distinct(), lifted.as_slice());
        }
        assert!(matches!(compose(&fixtures::t1(), &fixtures::s1()), Err(Error::NoSeed)));
    }

    #[test]
    fn graph_examples() {
        let fam: Vec<SetFunction> = fixtures::n3_indecomposables().into_iter().map(|(_, f)| f).collect();
        assert_eq!(fertility_graph(&fam).unwrap().edges.len(), 7);
        assert!(fertility_graph(&fixtures::n4_family()).unwrap().is_complete());
        assert!(fertility_graph(&fam[..1]).unwrap().edges.is_empty());
    }
}
