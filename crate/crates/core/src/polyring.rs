//! Exact sparse multivariate polynomials with divided-difference and
//! Demazure operators.
//!
//! A polynomial lives in a fixed ambient ring `Z[x_1..x_n]` (or the same
//! ring over another exact scalar); terms are stored in a `BTreeMap` keyed
//! by exponent vector, so iteration order is lexicographic and output is
//! deterministic. Coefficients are generic over [`Coeff`]; the concrete
//! instantiations used throughout are `MPoly<BigInt>` and
//! `MPoly<BigRational>` (see the crate-root aliases `Poly` and `RatPoly`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed};

/// Coefficient scalar: an exact, totally ordered, signed ring element.
///
/// Satisfied by `BigInt` and `BigRational`. Floating-point types do not
/// qualify (no total order), which is intentional: everything here is exact.
pub trait Coeff: Clone + Ord + Signed + FromPrimitive + fmt::Debug + fmt::Display {}

impl<T: Clone + Ord + Signed + FromPrimitive + fmt::Debug + fmt::Display> Coeff for T {}

/// Conversion into an exact rational, for the linear-algebra layer.
pub trait ToRational {
    fn to_rational(&self) -> BigRational;
}

impl ToRational for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl ToRational for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Exponent vector of a monomial: entry `i` is the exponent of `x_{i+1}`.
///
/// Ordering is lexicographic (derived from `Vec`), which fixes the canonical
/// term order of every polynomial in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVec(Vec<u32>);

impl ExponentVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVec(vec![0; n])
    }

    /// Standard basis vector `e_i` (1-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of 1..={n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        ExponentVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total degree: the coordinate sum.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Pointwise sum (monomial product).
    pub fn plus(&self, other: &ExponentVec) -> ExponentVec {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Pointwise difference, or `None` if any coordinate would go negative.
    pub fn checked_minus(&self, other: &ExponentVec) -> Option<ExponentVec> {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVec)
    }

    fn swapped(&self, i: usize) -> ExponentVec {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        ExponentVec(e)
    }
}

impl std::ops::Index<usize> for ExponentVec {
    type Output = u32;
    fn index(&self, idx: usize) -> &u32 {
        &self.0[idx]
    }
}

/// Sparse multivariate polynomial over an exact scalar.
///
/// Invariants: every stored coefficient is nonzero and every key has length
/// equal to the ambient variable count. Binary operations and comparisons
/// panic when the ambient variable counts differ; mixing ambients is a
/// programming error, not an input condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<C> {
    n: usize,
    terms: BTreeMap<ExponentVec, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(n: usize) -> Self {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(ExponentVec::zeros(n), c);
        }
        p
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(ExponentVec::unit(n, i), C::one())
    }

    pub fn monomial(exp: ExponentVec, c: C) -> Self {
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExponentVec, C)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &C)> {
        self.terms.iter()
    }

    /// Coefficient of `x^e`, zero if the monomial is absent.
    pub fn coeff(&self, e: &ExponentVec) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVec> {
        self.terms.keys()
    }

    /// Adds `c * x^e` in place, pruning a resulting zero.
    pub fn add_term(&mut self, e: ExponentVec, c: C) {
        assert_eq!(e.len(), self.n, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Maximum total degree over the support, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVec::degree).max()
    }

    /// `Some(d)` if every term has total degree `d`, `None` otherwise
    /// (including the zero polynomial).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|e| e.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Exchanges `x_i` and `x_{i+1}` (1-based `i < n`).
    pub fn swap_vars(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n, "swap index {i} out of 1..{}", self.n);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.swapped(i), c.clone()))
            .collect();
        MPoly { n: self.n, terms }
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})` (1-based `i < n`).
    ///
    /// Computed termwise: the antisymmetric pair `x^a - x^{s_i a}` divides
    /// exactly, with quotient a geometric sum in `x_i`, `x_{i+1}`. No general
    /// polynomial division is performed, so the result is exact by
    /// construction.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(
            i >= 1 && i < self.n,
            "divided difference index {i} out of 1..{}",
            self.n
        );
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let p = e[i - 1];
            let q = e[i];
            if p == q {
                continue; // symmetric term, cancels against s_i f
            }
            // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1})
            //   = sign * sum over u in [lo, hi) of x_i^u x_{i+1}^{p+q-1-u}
            let (lo, hi, negate) = if p > q { (q, p, false) } else { (p, q, true) };
            for u in lo..hi {
                let mut exp = e.0.clone();
                exp[i - 1] = u;
                exp[i] = p + q - 1 - u;
                let coef = if negate { -c.clone() } else { c.clone() };
                out.add_term(ExponentVec(exp), coef);
            }
        }
        out
    }

    /// Demazure operator `pi_i f = d_i (x_i * f)` (1-based `i < n`).
    pub fn demazure(&self, i: usize) -> Self {
        assert!(
            i >= 1 && i < self.n,
            "demazure index {i} out of 1..{}",
            self.n
        );
        let xi = Self::var(self.n, i);
        (&xi * self).divided_difference(i)
    }

    /// True iff every coefficient of `self` (implicit zeros included) is
    /// less than or equal to the corresponding coefficient of `g`.
    pub fn coeffwise_leq(&self, g: &Self) -> bool {
        assert_eq!(self.n, g.n, "ambient variable count mismatch");
        let zero = C::zero();
        for (e, c) in &self.terms {
            if *c > g.coeff(e) {
                return false;
            }
        }
        for (e, c) in &g.terms {
            if !self.terms.contains_key(e) && *c < zero {
                return false;
            }
        }
        true
    }

    /// Re-embeds into a larger ambient ring by appending zero exponents.
    pub fn extended(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot shrink ambient variable count");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exp = e.0.clone();
                exp.resize(n, 0);
                (ExponentVec(exp), c.clone())
            })
            .collect();
        MPoly { n, terms }
    }

    /// Partial derivative with respect to `x_i` (1-based).
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(
            i >= 1 && i <= self.n,
            "variable index {i} out of 1..={}",
            self.n
        );
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let k = e[i - 1];
            if k == 0 {
                continue;
            }
            let mut exp = e.0.clone();
            exp[i - 1] = k - 1;
            out.add_term(
                ExponentVec(exp),
                c.clone() * C::from_u32(k).expect("small integer fits any Coeff"),
            );
        }
        out
    }

    /// Monomial derivative operator: applies `d/dx_i` exactly `mu_i` times
    /// for each `i`.
    pub fn derivative_multi(&self, mu: &ExponentVec) -> Self {
        assert_eq!(mu.len(), self.n, "exponent length mismatch");
        let mut out = Self::zero(self.n);
        'term: for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut exp = Vec::with_capacity(self.n);
            for (&ev, &mv) in e.0.iter().zip(mu.as_slice()) {
                if ev < mv {
                    continue 'term;
                }
                // falling factorial ev * (ev-1) * .. * (ev-mv+1)
                for k in 0..mv {
                    coef = coef * C::from_u32(ev - k).expect("small integer fits any Coeff");
                }
                exp.push(ev - mv);
            }
            out.add_term(ExponentVec(exp), coef);
        }
        out
    }

    /// Same support, every coefficient replaced by one.
    pub fn support_to_ones(&self) -> Self {
        let terms = self.terms.keys().map(|e| (e.clone(), C::one())).collect();
        MPoly { n: self.n, terms }
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl MPoly<BigInt> {
    /// The normalization operator: divides the coefficient of `x^mu` by
    /// `mu! = mu_1! * .. * mu_n!`.
    pub fn normalize(&self) -> MPoly<BigRational> {
        let mut out = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut fact = BigInt::one();
            for &k in e.as_slice() {
                for j in 2..=k {
                    fact *= BigInt::from(j);
                }
            }
            out.add_term(e.clone(), BigRational::new(c.clone(), fact));
        }
        out
    }
}

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: Self) -> MPoly<C> {
        assert_eq!(self.n, rhs.n, "ambient variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> MPoly<C> {
        assert_eq!(self.n, rhs.n, "ambient variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        MPoly { n: self.n, terms }
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: Self) -> MPoly<C> {
        assert_eq!(self.n, rhs.n, "ambient variable count mismatch");
        let mut out = MPoly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(e: &ExponentVec) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.as_slice().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, k)),
        }
    }
    parts.join("*")
}
