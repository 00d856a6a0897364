//! Submodular set functions as deformed permutahedra.
//!
//! A [`SetFunction`] on the ground set `{1..n}` stores one rational per subset,
//! indexed by bitmask (bit `i - 1` set iff element `i` belongs to the subset).
//! Element `i` is represented internally by the zero-based index `i - 1`.
//!
//! Chamber convention: a permutation `σ` is a slice with `σ[k]` the element at
//! position `k + 1`, and it names the braid cone
//! `C_σ = {c : c_σ(1) ≤ … ≤ c_σ(n)}`. The greedy vertex for `σ` is filled from
//! the last position downward:
//! `x_σ(k) = f(σ{k..n}) − f(σ{k+1..n})`.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use serde::Serialize;

use crate::arith::{integer_rank, primitive_integer_form, Rat};
use crate::error::{Error, Result};

/// Subset of the ground set as a bitmask.
pub type Subset = u32;

/// A point of `Q^n`.
pub type Point = Vec<Rat>;

/// Default guard on the ground-set size for factorial enumerations.
pub const DEFAULT_MAX_N: usize = 10;

/// Hard cap on the ground-set size for any dense set function.
pub const MAX_GROUND_SET: usize = 12;

pub fn full_set(n: usize) -> Subset {
    ((1u64 << n) - 1) as Subset
}

pub fn contains(set: Subset, i: usize) -> bool {
    set & (1 << i) != 0
}

/// Zero-based elements of a subset in increasing order.
pub fn elements(set: Subset) -> Vec<usize> {
    (0..32).filter(|&i| contains(set, i)).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// One facet inequality of the submodular cone,
/// `f(S∪y) + f(S∪z) ≥ f(S) + f(S∪{y,z})`, with `y < z` and `S ∩ {y,z} = ∅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TightTriple {
    pub y: usize,
    pub z: usize,
    pub set: Subset,
}

impl TightTriple {
    pub fn new(set: Subset, y: usize, z: usize) -> Result<Self> {
        if y == z {
            return Err(Error::InvalidTriple(format!("y = z = {}", y + 1)));
        }
        if contains(set, y) || contains(set, z) {
            return Err(Error::InvalidTriple(format!(
                "S={set:#b} meets {{{}, {}}}",
                y + 1,
                z + 1
            )));
        }
        let (y, z) = if y < z { (y, z) } else { (z, y) };
        Ok(TightTriple { y, z, set })
    }

    /// Coefficients of the slack in the `2^n − 1` unknowns `g(X)`, `X ≠ ∅`
    /// (column `X − 1`).
    pub fn coefficient_row(&self, n: usize) -> Vec<i64> {
        let mut row = vec![0i64; (1usize << n) - 1];
        let (yb, zb) = (1 << self.y, 1 << self.z);
        for (mask, c) in [
            (self.set | yb, 1),
            (self.set | zb, 1),
            (self.set, -1),
            (self.set | yb | zb, -1),
        ] {
            if mask != 0 {
                row[mask as usize - 1] += c;
            }
        }
        row
    }
}

impl Serialize for TightTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            #[serde(rename = "S")]
            set: Vec<usize>,
            y: usize,
            z: usize,
        }
        Doc {
            set: elements(self.set).into_iter().map(|e| e + 1).collect(),
            y: self.y + 1,
            z: self.z + 1,
        }
        .serialize(s)
    }
}

/// All `C(n,2)·2^(n−2)` facet triples in lexicographic `(y, z, S)` order.
pub fn triple_candidates(n: usize) -> Vec<TightTriple> {
    let mut out = Vec::new();
    for y in 0..n {
        for z in y + 1..n {
            for set in 0..=full_set(n) {
                if !contains(set, y) && !contains(set, z) {
                    out.push(TightTriple { y, z, set });
                }
            }
        }
    }
    out
}

/// Exact values of a normalized set function `f : 2^[n] → Q` with `f(∅) = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetFunction {
    n: usize,
    values: Vec<Rat>,
}

impl SetFunction {
    pub fn new(n: usize, values: Vec<Rat>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("ground set must be nonempty".into()));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_GROUND_SET,
            });
        }
        if values.len() != 1 << n {
            return Err(Error::Input(format!(
                "expected {} values for n = {n}, got {}",
                1usize << n,
                values.len()
            )));
        }
        if !values[0].is_zero() {
            return Err(Error::Input("value of the empty set must be 0".into()));
        }
        Ok(SetFunction { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> Rat) -> Self {
        assert!((1..=MAX_GROUND_SET).contains(&n), "ground set size {n} out of range");
        let values = (0..=full_set(n))
            .map(|x| if x == 0 { Rat::zero() } else { f(x) })
            .collect();
        SetFunction { n, values }
    }

    pub fn zero(n: usize) -> Self {
        SetFunction::from_fn(n, |_| Rat::zero())
    }

    /// Modular function `X ↦ Σ_{i∈X} t_i`: the support function of the point `t`.
    pub fn modular(t: &[Rat]) -> Self {
        SetFunction::from_fn(t.len(), |x| elements(x).into_iter().map(|i| &t[i]).sum())
    }

    /// Standard permutahedron: `f(X)` is the sum of the `|X|` largest of `1..n`.
    pub fn permutahedron(n: usize) -> Self {
        SetFunction::from_fn(n, |x| {
            let k = x.count_ones() as i64;
            let n = n as i64;
            Rat::from((n - k + 1..=n).sum::<i64>())
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn value(&self, set: Subset) -> &Rat {
        &self.values[set as usize]
    }

    pub fn slack(&self, set: Subset, y: usize, z: usize) -> Result<Rat> {
        if y >= self.n || z >= self.n || set > full_set(self.n) {
            return Err(Error::InvalidTriple("element outside the ground set".into()));
        }
        Ok(self.triple_slack(&TightTriple::new(set, y, z)?))
    }

    pub fn triple_slack(&self, t: &TightTriple) -> Rat {
        let (yb, zb) = (1 << t.y, 1 << t.z);
        self.value(t.set | yb) + self.value(t.set | zb) - self.value(t.set) - self.value(t.set | yb | zb)
    }

    /// First facet triple with negative slack, if any.
    pub fn first_violation(&self) -> Option<TightTriple> {
        triple_candidates(self.n)
            .into_iter()
            .find(|t| self.triple_slack(t).is_negative())
    }

    pub fn is_submodular(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn require_submodular(&self) -> Result<()> {
        match self.first_violation() {
            None => Ok(()),
            Some(t) => Err(Error::NotSubmodular {
                set: t.set,
                y: t.y + 1,
                z: t.z + 1,
            }),
        }
    }

    /// Modular functions are exactly the points (all slacks vanish).
    pub fn is_modular(&self) -> bool {
        (0..=full_set(self.n)).all(|x| {
            let s: Rat = elements(x).into_iter().map(|i| self.value(1 << i)).sum();
            &s == self.value(x)
        })
    }

    pub fn greedy_vertex(&self, sigma: &[usize]) -> Result<Point> {
        self.require_submodular()?;
        check_permutation(sigma, self.n)?;
        Ok(self.greedy_vertex_unchecked(sigma))
    }

    /// Greedy vertex without validating submodularity or `sigma`.
    pub fn greedy_vertex_unchecked(&self, sigma: &[usize]) -> Point {
        let mut x = vec![Rat::zero(); self.n];
        let mut mask: Subset = 0;
        for &e in sigma.iter().rev() {
            let next = mask | (1 << e);
            x[e] = self.value(next) - self.value(mask);
            mask = next;
        }
        x
    }

    pub fn vertex_table(&self) -> Result<VertexTable> {
        self.vertex_table_with_limit(DEFAULT_MAX_N)
    }

    pub fn vertex_table_with_limit(&self, max_n: usize) -> Result<VertexTable> {
        if self.n > max_n {
            return Err(Error::GroundSetTooLarge { n: self.n, limit: max_n });
        }
        self.require_submodular()?;
        Ok(VertexTable::build(self))
    }

    /// Support function of `conv(pts)` on 0/1 directions, certified to cut out
    /// exactly `conv(pts)`.
    ///
    /// Points that are not vertices of the hull are allowed; every greedy
    /// vertex of the resulting function must appear among `pts`.
    pub fn from_vertices(n: usize, pts: &[Point]) -> Result<Self> {
        if pts.is_empty() {
            return Err(Error::Input("empty vertex list".into()));
        }
        if n == 0 || pts.iter().any(|p| p.len() != n) {
            return Err(Error::Input(format!("every vertex must have {n} coordinates")));
        }
        let sum = |p: &Point| p.iter().sum::<Rat>();
        let s0 = sum(&pts[0]);
        if pts.iter().any(|p| sum(p) != s0) {
            return Err(Error::UnequalCoordinateSums);
        }
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge { n, limit: MAX_GROUND_SET });
        }
        let f = SetFunction::from_fn(n, |x| {
            let members = elements(x);
            pts.iter()
                .map(|p| members.iter().map(|&i| &p[i]).sum::<Rat>())
                .max()
                .expect("nonempty")
        });
        if !f.is_submodular() {
            return Err(Error::NotDeformedPermutahedron);
        }
        let table = f.vertex_table()?;
        let given: HashSet<&Point> = pts.iter().collect();
        if table.distinct().iter().all(|v| given.contains(v)) {
            Ok(f)
        } else {
            Err(Error::NotDeformedPermutahedron)
        }
    }

    /// All facet triples with zero slack, in canonical order.
    pub fn tight_set(&self) -> Vec<TightTriple> {
        triple_candidates(self.n)
            .into_iter()
            .filter(|t| self.triple_slack(t).is_zero())
            .collect()
    }

    /// Dimension of the face of the submodular cone whose relative interior
    /// contains `self`, lineality included.
    pub fn defo_dim(&self) -> usize {
        defo_dim_of_tight(self.n, &self.tight_set())
    }

    pub fn is_indecomposable(&self) -> Result<RayCertificate> {
        self.require_submodular()?;
        let tight = self.tight_set();
        if tight.len() == triple_candidates(self.n).len() {
            return Err(Error::PointPolytope);
        }
        let defo_dim = defo_dim_of_tight(self.n, &tight);
        Ok(RayCertificate {
            n: self.n,
            indecomposable: defo_dim == self.n + 1,
            defo_dim,
            tight,
        })
    }

    pub fn is_normally_equivalent(&self, other: &SetFunction) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(self.tight_set() == other.tight_set())
    }

    pub fn translate(&self, t: &[Rat]) -> Result<Self> {
        if t.len() != self.n {
            return Err(Error::DimensionMismatch(self.n, t.len()));
        }
        let shift = SetFunction::modular(t);
        self.minkowski_sum(&shift)
    }

    pub fn dilate(&self, lambda: &Rat) -> Result<Self> {
        if lambda.is_negative() {
            return Err(Error::NegativeDilation(lambda.clone()));
        }
        Ok(SetFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * lambda).collect(),
        })
    }

    pub fn minkowski_sum(&self, other: &SetFunction) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(SetFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Representative modulo translations and dilations: singletons pinned to
    /// zero, values scaled to coprime integers.
    pub fn canonical_ray_form(&self) -> Result<Self> {
        self.require_submodular()?;
        if self.is_modular() {
            return Err(Error::LiesInLineality);
        }
        let pinned: Vec<Rat> = (0..=full_set(self.n))
            .map(|x| {
                let m: Rat = elements(x).into_iter().map(|i| self.value(1 << i)).sum();
                self.value(x) - &m
            })
            .collect();
        let ints = primitive_integer_form(&pinned)?;
        Ok(SetFunction {
            n: self.n,
            values: ints.into_iter().map(Rat::from).collect(),
        })
    }

    /// Relabels the ground set: the result `g` satisfies `g(π(X)) = f(X)`,
    /// i.e. coordinate `i` of every point moves to coordinate `π[i]`.
    pub fn relabel(&self, pi: &[usize]) -> Result<Self> {
        check_permutation(pi, self.n)?;
        let mut values = vec![Rat::zero(); 1 << self.n];
        for x in 0..=full_set(self.n) {
            let image = elements(x).into_iter().fold(0, |m, i| m | (1 << pi[i]));
            values[image as usize] = self.value(x).clone();
        }
        Ok(SetFunction { n: self.n, values })
    }
}

/// Relabeling `π` with `canonical(relabel(f, π)) = canonical(g)`, if one exists.
///
/// Detects polytopes that coincide up to a permutation of coordinates,
/// translation and dilation.
pub fn rotation_witness(f: &SetFunction, g: &SetFunction) -> Result<Option<Vec<usize>>> {
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch(f.n(), g.n()));
    }
    let target = g.canonical_ray_form()?;
    let cf = f.canonical_ray_form()?;
    for pi in permutations(f.n()) {
        if cf.relabel(&pi)? == target {
            return Ok(Some(pi));
        }
    }
    Ok(None)
}

fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if sigma.len() != n {
        return Err(Error::Input(format!("permutation must have {n} entries")));
    }
    for &e in sigma {
        if e >= n || std::mem::replace(&mut seen[e], true) {
            return Err(Error::Input(format!("{sigma:?} is not a permutation")));
        }
    }
    Ok(())
}

/// Nullity of the tight-equality system in the `2^n − 1` unknowns.
pub fn defo_dim_of_tight(n: usize, tight: &[TightTriple]) -> usize {
    let cols = (1usize << n) - 1;
    let rows: Vec<Vec<i64>> = tight.iter().map(|t| t.coefficient_row(n)).collect();
    cols - integer_rank(&rows, cols)
}

/// Rank witness for the face of the submodular cone containing a function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayCertificate {
    pub n: usize,
    pub tight: Vec<TightTriple>,
    pub defo_dim: usize,
    pub indecomposable: bool,
}

/// Greedy vertices for every permutation, in lexicographic permutation order.
#[derive(Clone, Debug)]
pub struct VertexTable {
    owner: SetFunction,
    perms: Vec<Vec<usize>>,
    points: Vec<Point>,
    distinct: Vec<Point>,
}

impl VertexTable {
    fn build(f: &SetFunction) -> Self {
        let perms = permutations(f.n());
        let points: Vec<Point> = perms.iter().map(|s| f.greedy_vertex_unchecked(s)).collect();
        let distinct: BTreeSet<Point> = points.iter().cloned().collect();
        VertexTable {
            owner: f.clone(),
            perms,
            points,
            distinct: distinct.into_iter().collect(),
        }
    }

    pub fn owner(&self) -> &SetFunction {
        &self.owner
    }

    pub fn n(&self) -> usize {
        self.owner.n()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn permutation(&self, idx: usize) -> &[usize] {
        &self.perms[idx]
    }

    pub fn vertex(&self, idx: usize) -> &Point {
        &self.points[idx]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Point)> {
        self.perms.iter().map(Vec::as_slice).zip(&self.points)
    }

    /// Distinct vertices, sorted lexicographically.
    pub fn distinct(&self) -> &[Point] {
        &self.distinct
    }

    /// Coordinate `i` of every entry, in table order.
    pub fn coordinate(&self, i: usize) -> impl Iterator<Item = &Rat> {
        self.points.iter().map(move |p| &p[i])
    }

    pub fn lookup(&self, sigma: &[usize]) -> Option<&Point> {
        self.perms.iter().position(|s| s == sigma).map(|k| &self.points[k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn r(v: i64) -> Rat {
        Rat::from(v)
    }

    fn pt(v: &[i64]) -> Point {
        v.iter().map(|&x| r(x)).collect()
    }

    #[test]
    fn submodularity_examples() {
        assert!(SetFunction::zero(3).is_submodular());
        let u12 = SetFunction::new(2, vec![r(0), r(1), r(1), r(1)]).unwrap();
        assert!(u12.is_submodular());
        let sup = SetFunction::new(2, vec![r(0), r(0), r(0), r(1)]).unwrap();
        assert!(!sup.is_submodular());
    }

    #[test]
    fn slack_examples() {
        let t1 = fixtures::t1();
        let s1 = fixtures::s1();
        assert_eq!(SetFunction::zero(3).slack(0b100, 0, 1).unwrap(), r(0));
        assert_eq!(t1.slack(0, 0, 1).unwrap(), r(1));
        // S1 = conv(0, e1 - e2): f({1,3}) = 1, so the triple ({3}, 1, 2) has slack 1.
        assert_eq!(s1.slack(0b100, 0, 1).unwrap(), r(1));
        assert_eq!(s1.slack(0, 0, 2).unwrap(), r(0));
        assert!(s1.slack(0b001, 0, 1).is_err());
        assert!(s1.slack(0, 1, 1).is_err());
    }

    #[test]
    fn greedy_examples() {
        let pi3 = SetFunction::permutahedron(3);
        assert_eq!(pi3.greedy_vertex(&[0, 1, 2]).unwrap(), pt(&[1, 2, 3]));
        assert_eq!(fixtures::t1().greedy_vertex(&[0, 1, 2]).unwrap(), pt(&[0, 0, 1]));
        assert_eq!(SetFunction::zero(3).greedy_vertex(&[2, 0, 1]).unwrap(), pt(&[0, 0, 0]));
        let sup = SetFunction::new(2, vec![r(0), r(0), r(0), r(1)]).unwrap();
        assert!(matches!(sup.greedy_vertex(&[0, 1]), Err(Error::NotSubmodular { .. })));
    }

    #[test]
    fn vertex_table_examples() {
        let t1 = fixtures::t1().vertex_table().unwrap();
        assert_eq!(t1.len(), 6);
        assert_eq!(t1.distinct(), &[pt(&[0, 0, 1]), pt(&[0, 1, 0]), pt(&[1, 0, 0])]);
        assert_eq!(SetFunction::zero(1).vertex_table().unwrap().distinct().len(), 1);
        let pi3 = SetFunction::permutahedron(3).vertex_table().unwrap();
        assert_eq!(pi3.distinct().len(), 6);
        assert!(SetFunction::zero(4).vertex_table_with_limit(3).is_err());
    }

    #[test]
    fn from_vertices_examples() {
        let t1 = SetFunction::from_vertices(3, &[pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])]).unwrap();
        assert!((1..8).all(|x| t1.value(x) == &r(1)));
        assert_eq!(fixtures::n4_family()[0].n(), 4);
        assert!(matches!(
            SetFunction::from_vertices(2, &[pt(&[0, 0]), pt(&[1, 1])]),
            Err(Error::UnequalCoordinateSums)
        ));
        // A triangle with an edge in direction (1, 1, -2) is not a deformed permutahedron.
        assert!(matches!(
            SetFunction::from_vertices(3, &[pt(&[0, 0, 0]), pt(&[1, 1, -2]), pt(&[1, -1, 0])]),
            Err(Error::NotDeformedPermutahedron)
        ));
        // Interior points are tolerated.
        let seg = SetFunction::from_vertices(2, &[pt(&[2, 0]), pt(&[0, 2]), pt(&[1, 1])]).unwrap();
        assert_eq!(seg.value(1), &r(2));
    }

    #[test]
    fn tight_set_examples() {
        assert_eq!(SetFunction::zero(3).tight_set().len(), 6);
        assert!(SetFunction::permutahedron(3).tight_set().is_empty());
        let s1 = fixtures::s1().tight_set();
        let all = triple_candidates(3);
        let expected: Vec<_> = all
            .into_iter()
            .filter(|t| !(t.y == 0 && t.z == 1))
            .collect();
        assert_eq!(s1, expected);
    }

    #[test]
    fn defo_dim_examples() {
        assert_eq!(SetFunction::zero(3).defo_dim(), 3);
        assert_eq!(fixtures::s1().defo_dim(), 4);
        assert_eq!(SetFunction::permutahedron(3).defo_dim(), 7);
    }

    #[test]
    fn indecomposability_examples() {
        assert!(fixtures::s1().is_indecomposable().unwrap().indecomposable);
        let pi3 = SetFunction::permutahedron(3).is_indecomposable().unwrap();
        assert!(!pi3.indecomposable);
        assert_eq!(pi3.defo_dim, 7);
        for p in fixtures::n4_family() {
            assert!(p.is_indecomposable().unwrap().indecomposable);
        }
        assert!(matches!(
            SetFunction::modular(&[r(1), r(2)]).is_indecomposable(),
            Err(Error::PointPolytope)
        ));
    }

    #[test]
    fn normal_equivalence_examples() {
        let s1 = fixtures::s1();
        assert!(s1.is_normally_equivalent(&s1).unwrap());
        let moved = s1.dilate(&r(2)).unwrap().translate(&[r(3), r(-1), r(5)]).unwrap();
        assert!(s1.is_normally_equivalent(&moved).unwrap());
        assert!(!s1.is_normally_equivalent(&fixtures::s2()).unwrap());
        assert!(s1.is_normally_equivalent(&SetFunction::zero(2)).is_err());
    }

    #[test]
    fn affine_operations() {
        let f = SetFunction::zero(3).translate(&[r(1), r(0), r(0)]).unwrap();
        assert_eq!(f.value(0b001), &r(1));
        assert_eq!(f.value(0b110), &r(0));
        let s1 = fixtures::s1();
        assert_eq!(s1.minkowski_sum(&s1).unwrap(), s1.dilate(&r(2)).unwrap());
        let hex = fixtures::t1().minkowski_sum(&fixtures::t2()).unwrap();
        assert_eq!(hex.vertex_table().unwrap().distinct().len(), 6);
        assert!(matches!(s1.dilate(&r(-1)), Err(Error::NegativeDilation(_))));
    }

    #[test]
    fn canonical_forms() {
        let s1 = fixtures::s1();
        let moved = s1.translate(&[r(4), r(-2), r(7)]).unwrap().dilate(&r(7)).unwrap();
        assert_eq!(moved.canonical_ray_form().unwrap(), s1.canonical_ray_form().unwrap());
        // S1 pinned: f({1,2}) = -1, f({2,3}) = 0, f({1,3}) = 0, f({1,2,3}) = -1.
        let c = s1.canonical_ray_form().unwrap();
        let expect: Vec<Rat> = [0, 0, 0, -1, 0, 0, 0, -1].iter().map(|&x| r(x)).collect();
        assert_eq!(c.values(), expect.as_slice());
        let forms: HashSet<_> = fixtures::n3_indecomposables()
            .iter()
            .map(|(_, f)| f.canonical_ray_form().unwrap())
            .collect();
        assert_eq!(forms.len(), 5);
        assert!(matches!(
            SetFunction::zero(3).canonical_ray_form(),
            Err(Error::LiesInLineality)
        ));
    }

    #[test]
    fn rotation_detection() {
        let s1 = fixtures::s1();
        let s3 = fixtures::s3();
        assert!(rotation_witness(&s1, &s3).unwrap().is_some());
        assert!(rotation_witness(&s1, &fixtures::t1()).unwrap().is_none());
    }

    #[test]
    fn triple_counts() {
        assert_eq!(triple_candidates(2).len(), 1);
        assert_eq!(triple_candidates(3).len(), 6);
        assert_eq!(triple_candidates(4).len(), 24);
    }
}
