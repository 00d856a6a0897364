//! Exact rational scalars and matrices.
//!
//! Every verdict in this crate (submodularity, ranks, fertility) is computed
//! over the rationals. [`Rat`] wraps an arbitrary-precision fraction kept in
//! lowest terms with a positive denominator; it serializes as the string
//! `"p/q"`, or `"p"` when the denominator is one.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    /// Total bit length of numerator and denominator; used to pick cheap pivots.
    pub fn bit_len(&self) -> u64 {
        self.0.numer().bits() + self.0.denom().bits()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_integer(v)
    }
}

impl From<i32> for Rat {
    fn from(v: i32) -> Self {
        Rat::from_integer(v)
    }
}

impl From<BigInt> for Rat {
    fn from(v: BigInt) -> Self {
        Rat::from_integer(v)
    }
}

impl From<BigRational> for Rat {
    fn from(v: BigRational) -> Self {
        Rat(v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Input(format!("malformed rational {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::Input(format!("zero denominator in {s:?}")));
                }
                Ok(Rat::new(p, q))
            }
            None => Ok(Rat::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Parses a slice of strings into rationals.
pub fn parse_rats<S: AsRef<str>>(items: &[S]) -> Result<Vec<Rat>> {
    items.iter().map(|s| s.as_ref().parse()).collect()
}

/// Unique positive rescaling of `v` with coprime integer entries.
///
/// The first nonzero entry keeps its sign.
pub fn primitive_integer_form(v: &[Rat]) -> Result<Vec<BigInt>> {
    if v.iter().all(Rat::is_zero) {
        return Err(Error::ZeroVector);
    }
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    Ok(primitive_of_integers(scaled))
}

/// Divides an integer vector by the gcd of its entries (positive scaling only).
pub fn primitive_of_integers(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x = &*x / &g;
        }
    }
    v
}

/// Dense rectangular matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Input("ragged matrix rows".into()));
        }
        let nrows = rows.len();
        Ok(RatMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Input("ragged matrix rows".into()));
        }
        Ok(RatMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&x| Rat::from(x)).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Reduced row echelon form; returns the pivot columns.
    ///
    /// Within each column the pivot is the nonzero entry of smallest bit length.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .min_by_key(|&i| self.get(i, c).bit_len());
            let Some(p) = best else { continue };
            for k in 0..self.cols {
                self.entries.swap(p * self.cols + k, r * self.cols + k);
            }
            let inv = self.get(r, c).recip();
            for k in c..self.cols {
                let v = self.get(r, k) * &inv;
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for k in c..self.cols {
                    if self.get(r, k).is_zero() {
                        continue;
                    }
                    let v = self.get(i, k) - &(&factor * self.get(r, k));
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the right nullspace `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free);
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    m.clone().reduce().len()
}

/// `cols(m) - rank(m)`.
pub fn nullspace_dim(m: &RatMatrix) -> usize {
    m.cols() - rank(m)
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Runs in checked `i128` arithmetic and falls back to the rational path if
/// any intermediate value overflows.
pub fn integer_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    match bareiss_rank_i128(rows, cols) {
        Some(r) => r,
        None => rank(&RatMatrix::from_i64_rows(rows, cols).expect("rectangular rows")),
    }
}

fn bareiss_rank_i128(rows: &[Vec<i64>], cols: usize) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = a.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| a[i][c] != 0)
            .min_by_key(|&i| a[i][c].unsigned_abs())
        else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][c];
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let lead = row[c];
            for k in c + 1..cols {
                let num = pivot.checked_mul(row[k])?.checked_sub(lead.checked_mul(pivot_row[k])?)?;
                row[k] = num / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Sign of a rational as an [`Ordering`] against zero.
pub fn sign(x: &Rat) -> Ordering {
    x.cmp(&Rat::zero())
}
