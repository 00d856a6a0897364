//! Extreme rays of the submodular cone by double description.
//!
//! The cone lives in the coordinates `g(X)` for `|X| ≥ 2`; pinning every
//! singleton to zero removes the translation lineality, so the cone is
//! pointed of dimension `2^n − n − 1` and cut out by one facet per triple.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{integer_rank, primitive_integer_form, primitive_of_integers, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::submod::{full_set, triple_candidates, SetFunction, Subset, TightTriple};

/// Largest pinned dimension enumerated at all (`n = 5`).
pub const MAX_DIM: usize = 26;
/// Largest pinned dimension enumerated without the long-run flag (`n = 4`).
pub const QUICK_DIM: usize = 11;
pub const CHECKPOINT_EVERY: usize = 10;

/// Subsets with at least two elements, ascending by bitmask.
pub fn pinned_subsets(n: usize) -> Vec<Subset> {
    (0..=full_set(n)).filter(|x| x.count_ones() >= 2).collect()
}

pub fn pinned_dim(n: usize) -> usize {
    (1 << n) - n - 1
}

/// Values of the canonical ray form on the pinned coordinates.
pub fn pinned_coordinates(f: &SetFunction) -> Result<Vec<BigInt>> {
    let c = f.canonical_ray_form()?;
    Ok(pinned_subsets(f.n())
        .into_iter()
        .map(|x| c.value(x).numer().clone())
        .collect())
}

/// The set function with singletons at zero and the given pinned values.
pub fn unpin(n: usize, ray: &[BigInt]) -> Result<SetFunction> {
    let subsets = pinned_subsets(n);
    if ray.len() != subsets.len() {
        return Err(Error::DimensionMismatch(ray.len(), subsets.len()));
    }
    let mut values = vec![Rat::zero(); 1 << n];
    for (x, v) in subsets.into_iter().zip(ray) {
        values[x as usize] = Rat::from(v.clone());
    }
    SetFunction::new(n, values)
}

/// H-description `{x : a·x ≥ 0}` of the pinned submodular cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeH {
    pub n: usize,
    pub dim: usize,
    pub triples: Vec<TightTriple>,
    pub normals: Vec<Vec<i64>>,
}

pub fn sc_facets(n: usize) -> Result<ConeH> {
    if !(2..=6).contains(&n) {
        return Err(Error::Input(format!("facet description needs 2 ≤ n ≤ 6, got {n}")));
    }
    let subsets = pinned_subsets(n);
    let column = |x: Subset| subsets.binary_search(&x).ok();
    let triples = triple_candidates(n);
    let normals = triples
        .iter()
        .map(|t| {
            let mut row = vec![0i64; subsets.len()];
            let (y, z) = (1 << t.y, 1 << t.z);
            for (x, c) in [(t.set | y, 1), (t.set | z, 1), (t.set, -1), (t.set | y | z, -1)] {
                if let Some(k) = column(x) {
                    row[k] += c;
                }
            }
            row
        })
        .collect();
    Ok(ConeH {
        n,
        dim: subsets.len(),
        triples,
        normals,
    })
}

fn dot(a: &[i64], r: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for (&c, x) in a.iter().zip(r) {
        match c {
            0 => {}
            1 => s += x,
            -1 => s -= x,
            c => s += x * c,
        }
    }
    s
}

/// Facet bitset; at most 128 facets (`n ≤ 5`).
type ZeroSet = u128;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct StoredRay {
    ray: Vec<BigInt>,
    zeros: ZeroSet,
}

/// Incremental double description over the facets of a [`ConeH`].
#[derive(Clone, Debug)]
pub struct DoubleDescription {
    h: ConeH,
    processed: Vec<usize>,
    rays: Vec<StoredRay>,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    n: usize,
    processed: Vec<usize>,
    rays: Vec<StoredRay>,
}

impl DoubleDescription {
    /// Starts from the simplicial cone of the first `dim` independent facets
    /// in triple order.
    pub fn new(h: ConeH) -> Result<Self> {
        if h.normals.len() > ZeroSet::BITS as usize {
            return Err(Error::Guard(format!("{} facets exceed the zero-set width", h.normals.len())));
        }
        let mut basis: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (k, a) in h.normals.iter().enumerate() {
            rows.push(a.clone());
            if integer_rank(&rows, h.dim) == rows.len() {
                basis.push(k);
            } else {
                rows.pop();
            }
            if basis.len() == h.dim {
                break;
            }
        }
        if basis.len() != h.dim {
            return Err(Error::Internal("cone is not pointed".into()));
        }
        let mut dd = DoubleDescription {
            h,
            processed: basis.clone(),
            rays: Vec::new(),
        };
        for (i, &k) in basis.iter().enumerate() {
            let others: Vec<Vec<i64>> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &b)| dd.h.normals[b].clone())
                .collect();
            let kernel = if others.is_empty() {
                vec![vec![Rat::one()]]
            } else {
                RatMatrix::from_i64_rows(&others, dd.h.dim)?.nullspace()
            };
            let [v] = kernel.as_slice() else {
                return Err(Error::Internal("basis facets are dependent".into()));
            };
            let mut ray = primitive_integer_form(v)?;
            if dot(&dd.h.normals[k], &ray).is_negative() {
                ray.iter_mut().for_each(|x| *x = -&*x);
            }
            let zeros = dd.zero_set(&ray);
            dd.rays.push(StoredRay { ray, zeros });
        }
        Ok(dd)
    }

    pub fn cone(&self) -> &ConeH {
        &self.h
    }

    /// Facets inserted so far, in insertion order.
    pub fn processed(&self) -> &[usize] {
        &self.processed
    }

    pub fn is_done(&self) -> bool {
        self.processed.len() == self.h.normals.len()
    }

    pub fn rays(&self) -> Vec<Vec<BigInt>> {
        self.rays.iter().map(|r| r.ray.clone()).collect()
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    fn zero_set(&self, ray: &[BigInt]) -> ZeroSet {
        self.processed
            .iter()
            .filter(|&&k| dot(&self.h.normals[k], ray).is_zero())
            .fold(0, |m, &k| m | (1 << k))
    }

    /// Next facet: fewest current rays lying on it, ties by triple order.
    fn next_facet(&self) -> Option<usize> {
        (0..self.h.normals.len())
            .filter(|k| !self.processed.contains(k))
            .min_by_key(|&k| {
                let incident = self
                    .rays
                    .iter()
                    .filter(|r| dot(&self.h.normals[k], &r.ray).is_zero())
                    .count();
                (incident, k)
            })
    }

    fn adjacent(&self, a: &StoredRay, b: &StoredRay) -> bool {
        let common = a.zeros & b.zeros;
        if (common.count_ones() as usize) + 2 < self.h.dim {
            return false;
        }
        let rows: Vec<Vec<i64>> = (0..self.h.normals.len())
            .filter(|k| common >> k & 1 == 1)
            .map(|k| self.h.normals[k].clone())
            .collect();
        integer_rank(&rows, self.h.dim) + 2 == self.h.dim
    }

    /// Inserts one facet; returns its index, or `None` when finished.
    pub fn step(&mut self) -> Option<usize> {
        let k = self.next_facet()?;
        let a = self.h.normals[k].clone();
        let values: Vec<BigInt> = self.rays.iter().map(|r| dot(&a, &r.ray)).collect();
        let pos: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i].is_negative()).collect();
        let bit: ZeroSet = 1 << k;

        let created: Vec<StoredRay> = pos
            .par_iter()
            .flat_map_iter(|&p| {
                let this = &*self;
                let values = &values;
                neg.iter().filter_map(move |&q| {
                    let (rp, rq) = (&this.rays[p], &this.rays[q]);
                    if !this.adjacent(rp, rq) {
                        return None;
                    }
                    let (vp, vq) = (&values[p], &values[q]);
                    let combo: Vec<BigInt> = rp
                        .ray
                        .iter()
                        .zip(&rq.ray)
                        .map(|(x, y)| vp * y - vq * x)
                        .collect();
                    Some(StoredRay {
                        ray: primitive_of_integers(combo),
                        zeros: (rp.zeros & rq.zeros) | bit,
                    })
                })
            })
            .collect();

        let mut next: Vec<StoredRay> = Vec::with_capacity(self.rays.len() + created.len());
        for (i, mut r) in std::mem::take(&mut self.rays).into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros |= bit;
            }
            next.push(r);
        }
        next.extend(created);
        self.rays = next;
        self.processed.push(k);
        Some(k)
    }

    pub fn save_checkpoint(&self, path: &Path) -> Result<()> {
        let cp = Checkpoint {
            n: self.h.n,
            processed: self.processed.clone(),
            rays: self.rays.clone(),
        };
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&cp)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn resume(path: &Path) -> Result<Self> {
        let cp: Checkpoint = crate::io::read_json(path)?;
        Ok(DoubleDescription {
            h: sc_facets(cp.n)?,
            processed: cp.processed,
            rays: cp.rays,
        })
    }

    pub fn finish(self) -> RaySet {
        RaySet::new(self.h.n, self.rays.into_iter().map(|r| r.ray).collect())
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Permits the `n = 5` enumeration.
    pub long_run: bool,
    /// Written every [`CHECKPOINT_EVERY`] facets, and resumed from if present.
    pub checkpoint: Option<PathBuf>,
}

pub fn enumerate_rays(h: ConeH, opts: &EnumerateOptions) -> Result<RaySet> {
    if h.dim > MAX_DIM {
        return Err(Error::Guard(format!("pinned dimension {} exceeds {MAX_DIM}", h.dim)));
    }
    if h.dim > QUICK_DIM && !opts.long_run {
        return Err(Error::Guard(format!(
            "pinned dimension {} needs the long-run flag",
            h.dim
        )));
    }
    let mut dd = match &opts.checkpoint {
        Some(p) if p.exists() => {
            let dd = DoubleDescription::resume(p)?;
            if dd.h != h {
                return Err(Error::Input(format!("checkpoint {} is for another cone", p.display())));
            }
            dd
        }
        _ => DoubleDescription::new(h)?,
    };
    let mut since = 0;
    while dd.step().is_some() {
        since += 1;
        if let Some(p) = &opts.checkpoint {
            if since == CHECKPOINT_EVERY {
                dd.save_checkpoint(p)?;
                since = 0;
            }
        }
    }
    Ok(dd.finish())
}

/// Primitive integer rays in pinned coordinates, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySet {
    pub n: usize,
    pub rays: Vec<Vec<BigInt>>,
}

impl RaySet {
    pub fn new(n: usize, mut rays: Vec<Vec<BigInt>>) -> Self {
        rays.sort();
        rays.dedup();
        RaySet { n, rays }
    }

    pub fn dim(&self) -> usize {
        pinned_dim(self.n)
    }

    pub fn count(&self) -> usize {
        self.rays.len()
    }

    pub fn position(&self, ray: &[BigInt]) -> Option<usize> {
        self.rays.binary_search_by(|r| r.as_slice().cmp(ray)).ok()
    }

    pub fn set_functions(&self) -> Result<Vec<SetFunction>> {
        self.rays.iter().map(|r| unpin(self.n, r)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n={} dim={} count={}\n", self.n, self.dim(), self.count());
        for r in &self.rays {
            let line: Vec<String> = r.iter().map(BigInt::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Input(format!("ray file: {m}"));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty"))?;
        let mut fields = [None; 3];
        for part in header.split_whitespace() {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("malformed header"))?;
            let value: usize = value.parse().map_err(|_| bad("malformed header"))?;
            match key {
                "n" => fields[0] = Some(value),
                "dim" => fields[1] = Some(value),
                "count" => fields[2] = Some(value),
                _ => return Err(bad("unknown header field")),
            }
        }
        let [Some(n), Some(dim), Some(count)] = fields else {
            return Err(bad("header needs n, dim and count"));
        };
        if !(2..=6).contains(&n) || dim != pinned_dim(n) {
            return Err(bad("header dimension does not match n"));
        }
        let rays = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let r: Vec<BigInt> = l
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad("non-integer entry")))
                    .collect::<Result<_>>()?;
                if r.len() != dim {
                    return Err(bad("ray length differs from dim"));
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()?;
        if rays.len() != count {
            return Err(bad("count does not match the number of rays"));
        }
        Ok(RaySet::new(n, rays))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        RaySet::parse(&text)
    }
}

/// For each family member, the index of its ray, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub matches: Vec<Option<usize>>,
    /// Rays hit by at least one member.
    pub covered: Vec<usize>,
}

impl CrossCheck {
    pub fn all_matched(&self) -> bool {
        self.matches.iter().all(Option::is_some)
    }
}

pub fn cross_check(family: &[SetFunction], rays: &RaySet) -> Result<CrossCheck> {
    let matches = family
        .iter()
        .map(|f| {
            if f.n() != rays.n {
                return Err(Error::DimensionMismatch(f.n(), rays.n));
            }
            Ok(rays.position(&pinned_coordinates(f)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut covered: Vec<usize> = matches.iter().flatten().copied().collect();
    covered.sort_unstable();
    covered.dedup();
    Ok(CrossCheck { matches, covered })
}
