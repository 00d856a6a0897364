//! Generalized polymatroids, stored through their lift to a deformed
//! `(n+1)`-permutahedron with coordinate sum zero.
//!
//! A pair `(P, Q)` of deformed `n`-permutahedra is a quotient when
//! `Q^σ_i ≤ P^σ_i` for every permutation `σ` and coordinate `i`. The GP-sum
//! `P ⊻ Q = (Q + R₊ⁿ) ∩ (P + R₋ⁿ)` is then the unique generalized polymatroid
//! with top face `P` and bottom face `Q`; its lift has support function
//!
//! ```text
//! g(X)       = f_P(X)                  for X ⊆ [n]
//! g(Y + n+1) = f_Q(Y) − f_Q([n])       for Y ⊆ [n]
//! ```

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::io::{SetFunctionDoc, GPOLYMATROID_KIND};
use crate::submod::{full_set, Point, SetFunction, Subset, VertexTable};

fn same_n(p: &SetFunction, q: &SetFunction) -> Result<usize> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(p.n(), q.n()));
    }
    Ok(p.n())
}

/// First `(σ, i)` with `Q^σ_i > P^σ_i` (or `≥` when `strict`), in
/// lexicographic permutation order.
fn violation(p: &VertexTable, q: &VertexTable, strict: bool) -> Option<(Vec<usize>, usize)> {
    for (k, (sigma, pv)) in p.entries().enumerate() {
        let qv = q.vertex(k);
        for i in 0..pv.len() {
            let bad = if strict { qv[i] >= pv[i] } else { qv[i] > pv[i] };
            if bad {
                return Some((sigma.to_vec(), i));
            }
        }
    }
    None
}

/// Witness `(σ, i)` that `Q ⪯ P` fails, if any.
pub fn quotient_violation(p: &SetFunction, q: &SetFunction) -> Result<Option<(Vec<usize>, usize)>> {
    same_n(p, q)?;
    Ok(violation(&p.vertex_table()?, &q.vertex_table()?, false))
}

pub fn is_quotient(p: &SetFunction, q: &SetFunction) -> Result<bool> {
    Ok(quotient_violation(p, q)?.is_none())
}

/// All quotient inequalities hold strictly.
pub fn is_generic_quotient(p: &SetFunction, q: &SetFunction) -> Result<bool> {
    same_n(p, q)?;
    Ok(violation(&p.vertex_table()?, &q.vertex_table()?, true).is_none())
}

/// `t_i = min_σ (P^σ_i − Q^σ_i) − 1`, so that `Q + t ≺ P` generically.
pub fn translate_to_generic(p: &SetFunction, q: &SetFunction) -> Result<Vec<Rat>> {
    let n = same_n(p, q)?;
    let (pt, qt) = (p.vertex_table()?, q.vertex_table()?);
    Ok((0..n)
        .map(|i| {
            pt.coordinate(i)
                .zip(qt.coordinate(i))
                .map(|(a, b)| a - b)
                .min()
                .expect("at least one permutation")
                - Rat::one()
        })
        .collect())
}

/// A validated quotient `Q ⪯ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPair {
    top: SetFunction,
    bottom: SetFunction,
}

impl QuotientPair {
    pub fn new(top: SetFunction, bottom: SetFunction) -> Result<Self> {
        if let Some((sigma, coord)) = quotient_violation(&top, &bottom)? {
            return Err(Error::QuotientViolated {
                sigma: sigma.iter().map(|e| e + 1).collect(),
                coord: coord + 1,
            });
        }
        Ok(QuotientPair { top, bottom })
    }

    pub fn top(&self) -> &SetFunction {
        &self.top
    }

    pub fn bottom(&self) -> &SetFunction {
        &self.bottom
    }

    pub fn gp_sum(&self) -> GPolymatroid {
        let n = self.top.n();
        let last: Subset = 1 << n;
        let q_full = self.bottom.value(full_set(n));
        let lifted = SetFunction::from_fn(n + 1, |x| {
            if x & last == 0 {
                self.top.value(x).clone()
            } else {
                self.bottom.value(x & !last) - q_full
            }
        });
        GPolymatroid { lifted }
    }
}

/// The GP-sum `P ⊻ Q`; fails with a `(σ, i)` witness unless `Q ⪯ P`.
pub fn gp_sum(p: &SetFunction, q: &SetFunction) -> Result<GPolymatroid> {
    Ok(QuotientPair::new(p.clone(), q.clone())?.gp_sum())
}

/// `Ind_P`: the GP-sum of `P − t` over the origin, where `t_i` is the minimum
/// of `x_i` on `P`.
pub fn independence_polytope(p: &SetFunction) -> Result<GPolymatroid> {
    p.require_submodular()?;
    let n = p.n();
    let full = full_set(n);
    let neg_t: Vec<Rat> = (0..n)
        .map(|i| p.value(full & !(1 << i)) - p.value(full))
        .collect();
    gp_sum(&p.translate(&neg_t)?, &SetFunction::zero(n))
}

/// `x ↦ (x, −Σx)`.
pub fn lift_point(x: &[Rat]) -> Point {
    let mut out = x.to_vec();
    out.push(-x.iter().sum::<Rat>());
    out
}

/// Drops the last coordinate.
pub fn project_point(y: &[Rat]) -> Point {
    y[..y.len() - 1].to_vec()
}

/// A generalized `n`-polymatroid, held as the submodular function of its lift.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GPolymatroid {
    lifted: SetFunction,
}

impl fmt::Debug for GPolymatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GPolymatroid").field("lifted", &self.lifted.values()).finish()
    }
}

impl GPolymatroid {
    pub fn from_lifted(lifted: SetFunction) -> Result<Self> {
        if lifted.n() < 2 {
            return Err(Error::Input("a lift needs at least two coordinates".into()));
        }
        lifted.require_submodular()?;
        if !lifted.value(full_set(lifted.n())).is_zero() {
            return Err(Error::Input("lifted function must vanish on the full ground set".into()));
        }
        Ok(GPolymatroid { lifted })
    }

    /// Ambient dimension of the unlifted polytope.
    pub fn n(&self) -> usize {
        self.lifted.n() - 1
    }

    pub fn lifted(&self) -> &SetFunction {
        &self.lifted
    }

    pub fn into_lifted(self) -> SetFunction {
        self.lifted
    }

    fn last(&self) -> Subset {
        1 << self.n()
    }

    /// Upper function: `max Σ_{i∈S} x_i`.
    pub fn p(&self, s: Subset) -> Rat {
        self.lifted.value(s).clone()
    }

    /// Lower function: `min Σ_{i∈T} x_i`.
    pub fn b(&self, t: Subset) -> Rat {
        let rest = full_set(self.n()) & !t;
        -self.lifted.value(rest | self.last())
    }

    pub fn top_face(&self) -> SetFunction {
        SetFunction::from_fn(self.n(), |x| self.p(x))
    }

    pub fn bottom_face(&self) -> SetFunction {
        let last = self.last();
        let base = self.lifted.value(last);
        SetFunction::from_fn(self.n(), |x| self.lifted.value(x | last) - base)
    }

    pub fn quotient_pair(&self) -> QuotientPair {
        QuotientPair {
            top: self.top_face(),
            bottom: self.bottom_face(),
        }
    }

    /// Vertices of the unlifted polytope, sorted and deduplicated.
    pub fn vertices(&self) -> Result<Vec<Point>> {
        let mut out: Vec<Point> = self
            .lifted
            .vertex_table()?
            .distinct()
            .iter()
            .map(|v| project_point(v))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Vertices of the lift, sorted.
    pub fn lifted_vertices(&self) -> Result<Vec<Point>> {
        Ok(self.lifted.vertex_table()?.distinct().to_vec())
    }

    pub fn dilate(&self, lambda: &Rat) -> Result<Self> {
        Ok(GPolymatroid {
            lifted: self.lifted.dilate(lambda)?,
        })
    }

    pub fn minkowski_sum(&self, other: &GPolymatroid) -> Result<Self> {
        Ok(GPolymatroid {
            lifted: self.lifted.minkowski_sum(&other.lifted)?,
        })
    }

    pub fn to_doc(&self) -> SetFunctionDoc {
        let mut doc = SetFunctionDoc::from(&self.lifted);
        doc.kind = Some(GPOLYMATROID_KIND.to_string());
        doc
    }
}

impl Serialize for GPolymatroid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GPolymatroid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = SetFunctionDoc::deserialize(deserializer)?;
        if doc.kind.as_deref() != Some(GPOLYMATROID_KIND) {
            return Err(D::Error::custom("expected \"kind\": \"gpolymatroid\""));
        }
        let lifted = doc.into_set_function().map_err(D::Error::custom)?;
        GPolymatroid::from_lifted(lifted).map_err(D::Error::custom)
    }
}
