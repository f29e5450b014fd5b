//! Exact Lorentzian-property checker for homogeneous polynomials with
//! nonnegative coefficients.
//!
//! A polynomial of degree `d` passes when its support satisfies the
//! M-convex exchange axiom and, for every monomial derivative operator of
//! order `d - 2`, the Hessian of the resulting quadratic has at most one
//! strictly positive eigenvalue. Eigenvalue signs are counted without
//! floating point: the characteristic polynomial comes from the
//! division-free Berkowitz algorithm and the counts from Descartes sign
//! variations, which are exact because a symmetric matrix has only real
//! eigenvalues.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::error::RangeError;
use crate::polyring::{Coeff, ExponentVec, MPoly, ToRational};

/// Size limits for [`is_lorentzian`]: the derivative loop visits every
/// exponent vector of weight `d - 2`, which grows combinatorially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LorentzLimits {
    pub max_degree: u32,
    pub max_vars: usize,
}

impl Default for LorentzLimits {
    fn default() -> Self {
        LorentzLimits {
            max_degree: 8,
            max_vars: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("support set is not homogeneous: {reason}")]
pub struct SupportError {
    pub reason: String,
}

/// The support of a homogeneous polynomial: a nonempty set of exponent
/// vectors with equal coordinate sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    n: usize,
    degree: u32,
    points: BTreeSet<ExponentVec>,
}

impl SupportSet {
    pub fn new(points: impl IntoIterator<Item = ExponentVec>) -> Result<Self, SupportError> {
        let points: BTreeSet<ExponentVec> = points.into_iter().collect();
        let Some(first) = points.iter().next() else {
            return Err(SupportError {
                reason: "empty point set".into(),
            });
        };
        let n = first.len();
        let degree = first.degree();
        for p in &points {
            if p.len() != n {
                return Err(SupportError {
                    reason: format!("mixed coordinate counts {} and {n}", p.len()),
                });
            }
            if p.degree() != degree {
                return Err(SupportError {
                    reason: format!("mixed degrees {} and {degree}", p.degree()),
                });
            }
        }
        Ok(SupportSet { n, degree, points })
    }

    pub fn from_poly<C: Coeff>(f: &MPoly<C>) -> Result<Self, SupportError> {
        Self::new(f.support().cloned())
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn points(&self) -> impl Iterator<Item = &ExponentVec> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    /// Exchange axiom: for all `a, b` in the set and every `i` with
    /// `a_i > b_i` there is a `j` with `a_j < b_j` such that
    /// `a - e_i + e_j` stays in the set.
    pub fn is_m_convex(&self) -> bool {
        for a in &self.points {
            for b in &self.points {
                for i in 0..self.n {
                    if a[i] <= b[i] {
                        continue;
                    }
                    let witness = (0..self.n).any(|j| {
                        if a[j] >= b[j] {
                            return false;
                        }
                        let mut moved = a.as_slice().to_vec();
                        moved[i] -= 1;
                        moved[j] += 1;
                        self.points.contains(&ExponentVec::new(moved))
                    });
                    if !witness {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Dense symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricRationalMatrix {
    n: usize,
    entries: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix is not symmetric (or not square): {reason}")]
pub struct MatrixShapeError {
    pub reason: String,
}

impl SymmetricRationalMatrix {
    #[allow(clippy::needless_range_loop)] // paired (i,j)/(j,i) access
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self, MatrixShapeError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixShapeError {
                    reason: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i][j] != entries[j][i] {
                    return Err(MatrixShapeError {
                        reason: format!("entries ({i},{j}) and ({j},{i}) differ"),
                    });
                }
            }
        }
        Ok(SymmetricRationalMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        SymmetricRationalMatrix {
            n,
            entries: vec![vec![BigRational::zero(); n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    /// Coefficients of `det(lambda*I - A)` in descending powers, leading
    /// coefficient one. Berkowitz iteration: completely division-free.
    pub fn char_poly(&self) -> Vec<BigRational> {
        let n = self.n;
        let a = &self.entries;
        if n == 0 {
            return vec![BigRational::one()];
        }
        let mut v = vec![BigRational::one(), -a[0][0].clone()];
        for r in 2..=n {
            let last = r - 1;
            let row: &[BigRational] = &a[last][..last];
            let col: Vec<BigRational> = (0..last).map(|i| a[i][last].clone()).collect();
            // q[0] = 1, q[1] = -a_rr, q[k] = -(row . M^{k-2} . col)
            let mut q = Vec::with_capacity(r + 1);
            q.push(BigRational::one());
            q.push(-a[last][last].clone());
            let mut power = col;
            for _ in 2..=r {
                let dot: BigRational = row
                    .iter()
                    .zip(&power)
                    .map(|(x, y)| x * y)
                    .fold(BigRational::zero(), |acc, t| acc + t);
                q.push(-dot);
                // power <- M * power (M = leading principal block)
                let next: Vec<BigRational> = (0..last)
                    .map(|i| {
                        (0..last)
                            .map(|j| &a[i][j] * &power[j])
                            .fold(BigRational::zero(), |acc, t| acc + t)
                    })
                    .collect();
                power = next;
            }
            // Toeplitz product: v_new[i] = sum_j q[i-j] * v[j]
            let mut next = vec![BigRational::zero(); r + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate() {
                    if i >= j && i - j < q.len() {
                        *slot = &*slot + &(&q[i - j] * vj);
                    }
                }
            }
            v = next;
        }
        v
    }
}

fn sign_variations(coeffs: impl Iterator<Item = i8>) -> usize {
    let mut variations = 0;
    let mut last = 0i8;
    for s in coeffs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact counts `(positive, negative, zero)` of the eigenvalues of a
/// symmetric rational matrix, from Descartes sign variations of the
/// characteristic polynomial (exact: all eigenvalues are real). The three
/// counts are computed independently (zero as the multiplicity of the root
/// zero), so they genuinely partition the dimension.
pub fn eigenvalue_sign_counts(m: &SymmetricRationalMatrix) -> (usize, usize, usize) {
    let p = m.char_poly();
    let pos = sign_variations(p.iter().map(sign_of));
    let neg = sign_variations(p.iter().enumerate().map(|(k, c)| {
        if k % 2 == 0 {
            sign_of(c)
        } else {
            -sign_of(c)
        }
    }));
    let zero = p.iter().rev().take_while(|c| c.is_zero()).count();
    debug_assert_eq!(pos + neg + zero, m.n(), "sign counts must partition n");
    (pos, neg, zero)
}

/// Number of strictly positive eigenvalues, with multiplicity.
pub fn positive_eigenvalue_count(m: &SymmetricRationalMatrix) -> usize {
    eigenvalue_sign_counts(m).0
}

/// Hessian of a homogeneous quadratic as a constant symmetric matrix.
fn quadratic_hessian<C: Coeff + ToRational>(g: &MPoly<C>) -> SymmetricRationalMatrix {
    debug_assert_eq!(g.homogeneous_degree(), Some(2));
    let n = g.n_vars();
    let mut h = SymmetricRationalMatrix::zero(n);
    for (e, c) in g.terms() {
        let support: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        match support.as_slice() {
            [i] => {
                // c * x_i^2 contributes 2c on the diagonal
                let two_c = c.to_rational() * BigRational::from_integer(2.into());
                h.entries[*i][*i] = &h.entries[*i][*i] + &two_c;
            }
            [i, j] => {
                let r = c.to_rational();
                h.entries[*i][*j] = &h.entries[*i][*j] + &r;
                h.entries[*j][*i] = &h.entries[*j][*i] + &r;
            }
            _ => unreachable!("quadratic term touches at most two variables"),
        }
    }
    h
}

/// All exponent vectors of length `n` with coordinate sum `weight`,
/// lexicographic order.
fn exponent_vectors_of_weight(n: usize, weight: u32) -> Vec<ExponentVec> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVec>) {
        if cur.len() + 1 == n {
            let mut full = cur.clone();
            full.push(left);
            out.push(ExponentVec::new(full));
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, weight, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Lorentzian test with the default size limits.
pub fn is_lorentzian<C: Coeff + ToRational>(f: &MPoly<C>) -> Result<bool, RangeError> {
    is_lorentzian_with_limits(f, LorentzLimits::default())
}

/// Lorentzian test: homogeneous with nonnegative coefficients, M-convex
/// support, and every order-`(d-2)` monomial derivative has a Hessian with
/// at most one positive eigenvalue. Degree at most one passes outright;
/// degree two tests the Hessian of the polynomial itself.
///
/// Non-homogeneous or negatively-signed input yields `Ok(false)`; only the
/// size limits produce an error.
pub fn is_lorentzian_with_limits<C: Coeff + ToRational>(
    f: &MPoly<C>,
    limits: LorentzLimits,
) -> Result<bool, RangeError> {
    if f.is_zero() {
        return Ok(true);
    }
    if f.terms().any(|(_, c)| c.is_negative()) {
        return Ok(false);
    }
    let Some(d) = f.homogeneous_degree() else {
        return Ok(false);
    };
    if d > limits.max_degree {
        return Err(RangeError::new(
            "polynomial degree",
            d as u64,
            limits.max_degree as u64,
        ));
    }
    if f.n_vars() > limits.max_vars {
        return Err(RangeError::new(
            "variable count",
            f.n_vars() as u64,
            limits.max_vars as u64,
        ));
    }
    if d <= 1 {
        return Ok(true);
    }
    let support = SupportSet::from_poly(f).expect("homogeneity already checked");
    if !support.is_m_convex() {
        return Ok(false);
    }
    for mu in exponent_vectors_of_weight(f.n_vars(), d - 2) {
        let g = f.derivative_multi(&mu);
        if g.is_zero() {
            continue;
        }
        let hessian = quadratic_hessian(&g);
        if positive_eigenvalue_count(&hessian) > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    use crate::characters::{key_poly, schubert_poly};
    use crate::combinat::{Composition, Permutation};
    use crate::Poly;

    fn ev(e: &[u32]) -> ExponentVec {
        ExponentVec::new(e.to_vec())
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sym(rows: &[&[i64]]) -> SymmetricRationalMatrix {
        SymmetricRationalMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn m_convex_examples() {
        let s = SupportSet::new([ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]).unwrap();
        assert!(s.is_m_convex());

        let s = SupportSet::new([ev(&[2, 0]), ev(&[0, 2])]).unwrap();
        assert!(!s.is_m_convex());

        let s = SupportSet::new([ev(&[3, 1, 0])]).unwrap();
        assert!(s.is_m_convex());
    }

    #[test]
    fn m_convex_brute_force_agreement() {
        // spot-check the quantifier structure on a hand-picked set
        let points = [
            ev(&[2, 1, 0]),
            ev(&[1, 2, 0]),
            ev(&[1, 1, 1]),
            ev(&[0, 2, 1]),
        ];
        let s = SupportSet::new(points.clone()).unwrap();
        let set: BTreeSet<ExponentVec> = points.into_iter().collect();
        let mut brute = true;
        for a in &set {
            for b in &set {
                for i in 0..3 {
                    if a[i] > b[i] {
                        let ok = (0..3).any(|j| {
                            a[j] < b[j] && {
                                let mut m = a.as_slice().to_vec();
                                m[i] -= 1;
                                m[j] += 1;
                                set.contains(&ExponentVec::new(m))
                            }
                        });
                        brute &= ok;
                    }
                }
            }
        }
        assert_eq!(s.is_m_convex(), brute);
    }

    #[test]
    fn support_set_rejects_mixed_degrees() {
        assert!(SupportSet::new([ev(&[2, 0]), ev(&[1, 0])]).is_err());
        assert!(SupportSet::new(std::iter::empty()).is_err());
    }

    #[test]
    fn char_poly_of_swap_matrix() {
        let m = sym(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.char_poly(), vec![rat(1), rat(0), rat(-1)]);
        assert_eq!(positive_eigenvalue_count(&m), 1);
    }

    #[test]
    fn identity_has_all_positive_eigenvalues() {
        let m = sym(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(m.char_poly(), vec![rat(1), rat(-3), rat(3), rat(-1)]);
        assert_eq!(positive_eigenvalue_count(&m), 3);
    }

    #[test]
    fn zero_matrix_has_no_positive_eigenvalues() {
        let m = SymmetricRationalMatrix::zero(3);
        assert_eq!(positive_eigenvalue_count(&m), 0);
        assert_eq!(eigenvalue_sign_counts(&m), (0, 0, 3));
    }

    #[test]
    fn sign_counts_partition_dimension() {
        let m = sym(&[&[2, 0, 0], &[0, -5, 0], &[0, 0, 0]]);
        assert_eq!(eigenvalue_sign_counts(&m), (1, 1, 1));
        let m = sym(&[&[1, 2], &[2, 1]]); // eigenvalues 3 and -1
        assert_eq!(eigenvalue_sign_counts(&m), (1, 1, 0));
    }

    #[test]
    fn schubert_anchors_are_not_lorentzian() {
        let w1432 = Permutation::from_word(vec![1, 4, 3, 2]).unwrap();
        let w1423 = Permutation::from_word(vec![1, 4, 2, 3]).unwrap();
        assert!(!is_lorentzian(&schubert_poly(&w1432)).unwrap());
        assert!(!is_lorentzian(&schubert_poly(&w1423)).unwrap());
    }

    #[test]
    fn small_keys_are_lorentzian() {
        assert!(is_lorentzian(&key_poly(&Composition::new(vec![1, 1, 0]))).unwrap());
        assert!(is_lorentzian(&key_poly(&Composition::new(vec![2, 1]))).unwrap());
    }

    #[test]
    fn non_homogeneous_is_not_lorentzian() {
        let f = &Poly::var(2, 1) + &Poly::one(2);
        assert!(!is_lorentzian(&f).unwrap());
    }

    #[test]
    fn negative_coefficient_is_not_lorentzian() {
        let f = &Poly::var(2, 1) - &Poly::var(2, 2);
        assert!(!is_lorentzian(&f).unwrap());
    }

    #[test]
    fn low_degree_passes() {
        assert!(is_lorentzian(&Poly::one(2)).unwrap());
        assert!(is_lorentzian(&Poly::var(3, 2)).unwrap());
        assert!(is_lorentzian(&Poly::zero(2)).unwrap());
    }

    #[test]
    fn limits_are_enforced() {
        let f = Poly::monomial(ev(&[9, 0]), BigInt::one());
        assert!(is_lorentzian(&f).is_err());
        let ok = is_lorentzian_with_limits(
            &f,
            LorentzLimits {
                max_degree: 9,
                max_vars: 6,
            },
        );
        assert!(ok.unwrap());
    }

    #[test]
    fn derivative_loop_enumerates_simplex() {
        assert_eq!(exponent_vectors_of_weight(3, 2).len(), 6);
        assert_eq!(exponent_vectors_of_weight(1, 5), vec![ev(&[5])]);
        let all = exponent_vectors_of_weight(2, 3);
        assert_eq!(
            all,
            vec![ev(&[0, 3]), ev(&[1, 2]), ev(&[2, 1]), ev(&[3, 0])]
        );
    }

    #[test]
    fn normalized_lorentzian_composition_runs_on_rationals() {
        // N preserves the Lorentzian property for these anchors; the checker
        // must accept rational coefficients
        let w = Permutation::from_word(vec![2, 1, 4, 3]).unwrap();
        let s = schubert_poly(&w);
        assert!(is_lorentzian(&s).unwrap());
        assert!(is_lorentzian(&s.normalize()).unwrap());
    }
}
