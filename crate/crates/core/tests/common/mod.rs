//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use proptest::prelude::*;
use rand::Rng;
use subcone::submod::{elements, full_set};
use subcone::{Point, Rat, SetFunction};

pub fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

pub fn ints(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| Rat::from(x)).collect()
}

/// `X ↦ Σ_k c_k · min(|X ∩ A_k|, r_k) + Σ_{i∈X} t_i`: nonnegative sums of
/// truncated cardinalities are submodular.
pub fn build(n: usize, blocks: &[(i64, u32, u32)], t: &[i64]) -> SetFunction {
    SetFunction::from_fn(n, |x| {
        let mut v = Rat::zero();
        for &(c, a, r) in blocks {
            let hit = (x & a).count_ones().min(r);
            v += Rat::from(c * hit as i64);
        }
        for i in elements(x) {
            v += Rat::from(t[i]);
        }
        v
    })
}

pub fn submodular(n: usize) -> impl Strategy<Value = SetFunction> {
    let full = full_set(n);
    (
        prop::collection::vec((1i64..4, 1u32..=full, 1u32..=n as u32), 1..5),
        prop::collection::vec(-3i64..4, n),
    )
        .prop_map(move |(blocks, t)| build(n, &blocks, &t))
}

/// Same family as [`submodular`], drawn from a plain RNG.
pub fn random_submodular<R: Rng>(rng: &mut R, n: usize) -> SetFunction {
    let full = full_set(n);
    let blocks: Vec<(i64, u32, u32)> = (0..rng.gen_range(1..5))
        .map(|_| (rng.gen_range(1..4), rng.gen_range(1..=full), rng.gen_range(1..=n as u32)))
        .collect();
    let t: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..4)).collect();
    build(n, &blocks, &t)
}

/// `(P, Q)` with `Q ⪯ P`, as `P = Q + D` for a monotone submodular `D`.
pub fn random_quotient_pair<R: Rng>(rng: &mut R, n: usize) -> (SetFunction, SetFunction) {
    let full = full_set(n);
    let q = random_submodular(rng, n);
    let blocks: Vec<(i64, u32, u32)> = (0..rng.gen_range(0..4))
        .map(|_| (rng.gen_range(0..3), rng.gen_range(1..=full), rng.gen_range(1..=n as u32)))
        .collect();
    let t: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
    (q.minkowski_sum(&build(n, &blocks, &t)).unwrap(), q)
}

pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(0i64..7), rng.gen_range(1i64..5))
}

pub fn positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..7, 1i64..5).prop_map(|(p, q)| Rat::new(p, q))
}

pub fn nonnegative_rat() -> impl Strategy<Value = Rat> {
    (0i64..7, 1i64..5).prop_map(|(p, q)| Rat::new(p, q))
}

pub fn sum_over(x: &[Rat], set: u32) -> Rat {
    elements(set).into_iter().map(|i| &x[i]).sum()
}

/// Solves a square system by Gauss–Jordan elimination; `None` if singular.
pub fn solve(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] * &inv;
                for c in col..n {
                    let d = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &d;
                }
                let d = &factor * &b[col];
                b[r] = &b[r] - &d;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Basis of `{x : a·x = 0}` by row reduction.
pub fn kernel(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for k in 0..cols {
                    let d = &factor * &m[r][k];
                    m[i][k] = &m[i][k] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][free];
            }
            v
        })
        .collect()
}

/// Vertices of `(Q + R₊ⁿ) ∩ (P + R₋ⁿ)` from its inequality description
/// `x(S) ≤ f_P(S)` and `x(T) ≥ f_Q([n]) − f_Q([n] \ T)`, by solving every
/// choice of `n` constraints as equalities.
pub fn gp_sum_vertices_oracle(p: &SetFunction, q: &SetFunction) -> Vec<Point> {
    let n = p.n();
    let full = full_set(n);
    let mut cons: Vec<(u32, Rat, bool)> = Vec::new();
    for s in 1..=full {
        cons.push((s, p.value(s).clone(), true));
        cons.push((s, q.value(full) - q.value(full & !s), false));
    }
    let row = |s: u32| -> Vec<Rat> { (0..n).map(|i| if s >> i & 1 == 1 { Rat::one() } else { Rat::zero() }).collect() };
    let feasible = |x: &[Rat]| {
        cons.iter().all(|(s, v, upper)| {
            let lhs = sum_over(x, *s);
            if *upper {
                &lhs <= v
            } else {
                &lhs >= v
            }
        })
    };
    let mut out: Vec<Point> = Vec::new();
    for choice in itertools_combinations(cons.len(), n) {
        let a = choice.iter().map(|&k| row(cons[k].0)).collect();
        let b = choice.iter().map(|&k| cons[k].1.clone()).collect();
        if let Some(x) = solve(a, b) {
            if feasible(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All `k`-subsets of `0..n`, lexicographic.
pub fn itertools_combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
