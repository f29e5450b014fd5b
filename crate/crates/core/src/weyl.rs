//! Flagged Weyl modules through symbolic minors of a generic
//! upper-triangular matrix `Y`.
//!
//! For a diagram `D` and a sub-diagram `C <= D`, the product of column
//! minors `f_C(Y) = prod_j det(Y^{C_j}_{D_j})` spans the module; the
//! coefficient of `x^w` in the dual character is the exact rank of the span
//! of the `f_C` with `x^C = x^w`. This module computes those ranks with
//! fraction-free integer elimination, together with the dependent families
//! and reduced-column structure that explain when the upper bound is or is
//! not attained.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::combinat::Permutation;
use crate::diagrams::{enumerate_sub_diagrams, rothe_diagram, Diagram};
use crate::error::RangeError;
use crate::polyring::ExponentVec;
use crate::Poly;

/// Default cap on the size parameter of the dependence identity check.
pub const DEFAULT_DEPENDENCE_GUARD: usize = 7;

/// A monomial in the variables `y_{ij}`, `i <= j`: a sorted multiset of
/// index pairs.
///
/// `Y` is upper-triangular, so a pair with `i > j` never exists; the
/// constructor enforces this.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial {
    factors: Vec<(usize, usize)>,
}

impl YMonomial {
    pub fn one() -> Self {
        YMonomial {
            factors: Vec::new(),
        }
    }

    /// The single variable `y_{ij}`.
    pub fn var(i: usize, j: usize) -> Self {
        assert!(
            i >= 1 && i <= j,
            "y_({i},{j}) does not exist: Y is upper-triangular"
        );
        YMonomial {
            factors: vec![(i, j)],
        }
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn times(&self, other: &YMonomial) -> YMonomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        factors.sort_unstable();
        YMonomial { factors }
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(i, j) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if i <= 9 && j <= 9 {
                write!(f, "y{i}{j}")?;
            } else {
                write!(f, "y({i},{j})")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in the `y_{ij}` with integer coefficients, terms in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    terms: BTreeMap<YMonomial, BigInt>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn one() -> Self {
        YPoly::term(YMonomial::one(), BigInt::one())
    }

    pub fn var(i: usize, j: usize) -> Self {
        YPoly::term(YMonomial::var(i, j), BigInt::one())
    }

    pub fn term(m: YMonomial, c: BigInt) -> Self {
        let mut p = YPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: YMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &YMonomial> {
        self.terms.keys()
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: Self) -> YPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: Self) -> YPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: Self) -> YPoly {
        let mut out = YPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
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
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Symbolic determinant of the submatrix of `Y` with the given row and
/// column index sets (both sorted ascending, equal length).
///
/// Entry `(a, b)` is `y_{rows[a], cols[b]}` when `rows[a] <= cols[b]` and
/// zero otherwise; the expansion walks the first column and prunes the
/// structural zeros, which keeps near-triangular minors cheap.
pub fn minor(rows: &[usize], cols: &[usize]) -> YPoly {
    assert_eq!(rows.len(), cols.len(), "minor needs a square submatrix");
    if rows.is_empty() {
        return YPoly::one();
    }
    let mut out = YPoly::zero();
    let c0 = cols[0];
    for (a, &r) in rows.iter().enumerate() {
        if r > c0 {
            break; // rows are sorted: everything below is structurally zero
        }
        let rest: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(b, _)| *b != a)
            .map(|(_, &x)| x)
            .collect();
        let sub = minor(&rest, &cols[1..]);
        let signed = if a % 2 == 0 { sub } else { -&sub };
        out = &out + &(&YPoly::var(r, c0) * &signed);
    }
    out
}

/// The spanning polynomial `f_C(Y) = prod_j det(Y^{C_j}_{D_j})` of a
/// sub-diagram candidate `C` against `D`.
pub fn f_c(c: &Diagram, d: &Diagram) -> YPoly {
    assert_eq!(c.n(), d.n(), "diagram grid sizes differ");
    let mut out = YPoly::one();
    for j in 1..=d.n() {
        assert_eq!(
            c.column(j).len(),
            d.column(j).len(),
            "column {j} size mismatch"
        );
        out = &out * &minor(c.column(j), d.column(j));
        if out.is_zero() {
            return out;
        }
    }
    out
}

/// Exact rank of the span of a family of `YPoly`, over the rationals.
///
/// Rows are coefficient vectors against the canonically ordered union of
/// the occurring monomials; elimination is fraction-free (Bareiss), so all
/// intermediate values stay integers.
pub fn ypoly_rank(polys: &[YPoly]) -> usize {
    let columns: BTreeMap<&YMonomial, usize> = polys
        .iter()
        .flat_map(|p| p.monomials())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(idx, m)| (m, idx))
        .collect();
    let width = columns.len();
    let matrix: Vec<Vec<BigInt>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); width];
            for (m, c) in p.terms() {
                row[columns[m]] = c.clone();
            }
            row
        })
        .collect();
    bigint_matrix_rank(matrix)
}

/// Fraction-free Gaussian elimination rank (one-step Bareiss with row
/// pivoting). Every division is exact; debug builds verify that.
pub(crate) fn bigint_matrix_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                let num = &m[rank][c] * &m[r][cc] - &m[r][c] * &m[rank][cc];
                let quot = &num / &prev;
                debug_assert_eq!(&quot * &prev, num, "Bareiss division must be exact");
                m[r][cc] = quot;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// The weight space of one monomial: the sub-diagrams realizing it, their
/// spanning polynomials, and the exact rank of the span.
#[derive(Debug, Clone)]
pub struct WeightSpaceReport {
    pub weight: ExponentVec,
    pub members: Vec<(Diagram, YPoly)>,
    pub rank: usize,
}

/// Collects every `C <= D` with `x^C` equal to the given weight and
/// computes the rank of the span of their `f_C`.
pub fn weight_space_rank(d: &Diagram, weight: &ExponentVec) -> WeightSpaceReport {
    assert_eq!(weight.len(), d.n(), "weight length must match grid size");
    let mut members = Vec::new();
    for c in enumerate_sub_diagrams(d) {
        if c.monomial() == *weight {
            let f = f_c(&c, d);
            // f_C != 0 whenever C <= D; a zero row cannot occur
            assert!(!f.is_zero(), "member polynomial vanished for C <= D");
            members.push((c, f));
        }
    }
    let polys: Vec<YPoly> = members.iter().map(|(_, f)| f.clone()).collect();
    let rank = ypoly_rank(&polys);
    WeightSpaceReport {
        weight: weight.clone(),
        members,
        rank,
    }
}

/// Dual character of the flagged Weyl module of `D`: the sum over distinct
/// weights of `rank * x^weight`.
pub fn dual_character(d: &Diagram) -> Poly {
    let mut groups: BTreeMap<ExponentVec, Vec<Diagram>> = BTreeMap::new();
    for c in enumerate_sub_diagrams(d) {
        groups.entry(c.monomial()).or_default().push(c);
    }
    // minors recur across members of one diagram; cache them per column
    let mut minors: HashMap<(usize, Vec<usize>), YPoly> = HashMap::new();
    let mut expand = |c: &Diagram| -> YPoly {
        let mut out = YPoly::one();
        for j in 1..=d.n() {
            let key = (j, c.column(j).to_vec());
            let m = minors
                .entry(key)
                .or_insert_with(|| minor(c.column(j), d.column(j)));
            out = &out * m;
        }
        out
    };
    let mut out = Poly::zero(d.n());
    for (weight, cs) in groups {
        let polys: Vec<YPoly> = cs.iter().map(&mut expand).collect();
        debug_assert!(polys.iter().all(|f| !f.is_zero()));
        let rank = ypoly_rank(&polys);
        assert!(rank >= 1, "weight space with members must have rank >= 1");
        out.add_term(weight, BigInt::from(rank));
    }
    out
}

/// Positions `(i, k, p, q)` of a length-4 subsequence of `w` whose values
/// put the smallest first and the largest second (an occurrence of 1432 or
/// 1423; the relative order of the last two letters is immaterial).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternOccurrence {
    pub i: usize,
    pub k: usize,
    pub p: usize,
    pub q: usize,
}

impl PatternOccurrence {
    pub fn new(i: usize, k: usize, p: usize, q: usize) -> Self {
        PatternOccurrence { i, k, p, q }
    }
}

impl fmt::Display for PatternOccurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.i, self.k, self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OccurrenceError {
    #[error("positions {0} are not strictly increasing within 1..={1}")]
    OutOfRange(PatternOccurrence, usize),
    #[error("subsequence at {0} is not order-isomorphic to 1432 or 1423")]
    NotAnOccurrence(PatternOccurrence),
    #[error(
        "occurrence {0} does not have the extremal first two positions (expected i={1}, k={2})"
    )]
    NotExtremal(PatternOccurrence, usize, usize),
}

fn is_union_occurrence(w: &Permutation, i: usize, k: usize, p: usize, q: usize) -> bool {
    let (wi, wk, wp, wq) = (w.at(i), w.at(k), w.at(p), w.at(q));
    wi < wp && wi < wq && wp < wk && wq < wk
}

/// The canonical occurrence used by the dependent-family construction:
/// largest first position, then smallest second position, then the
/// lexicographically smallest completion. `None` if `w` avoids both 1432
/// and 1423.
pub fn find_extremal_occurrence(w: &Permutation) -> Option<PatternOccurrence> {
    let n = w.len();
    let mut best: Option<PatternOccurrence> = None;
    for i in 1..=n {
        for k in i + 1..=n {
            for p in k + 1..=n {
                for q in p + 1..=n {
                    if !is_union_occurrence(w, i, k, p, q) {
                        continue;
                    }
                    // prefer the largest i, then the smallest k, then the
                    // lexicographically smallest completion (p, q)
                    let cand = PatternOccurrence::new(i, k, p, q);
                    let key = |o: &PatternOccurrence| {
                        (
                            o.i,
                            std::cmp::Reverse(o.k),
                            std::cmp::Reverse(o.p),
                            std::cmp::Reverse(o.q),
                        )
                    };
                    if best.as_ref().is_none_or(|b| key(&cand) > key(b)) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

fn validate_occurrence(w: &Permutation, occ: &PatternOccurrence) -> Result<(), OccurrenceError> {
    let n = w.len();
    let PatternOccurrence { i, k, p, q } = *occ;
    if !(1 <= i && i < k && k < p && p < q && q <= n) {
        return Err(OccurrenceError::OutOfRange(*occ, n));
    }
    if !is_union_occurrence(w, i, k, p, q) {
        return Err(OccurrenceError::NotAnOccurrence(*occ));
    }
    let extremal = find_extremal_occurrence(w).expect("w contains an occurrence");
    if occ.i != extremal.i || occ.k != extremal.k {
        return Err(OccurrenceError::NotExtremal(*occ, extremal.i, extremal.k));
    }
    Ok(())
}

/// Builds the diagrams `C^(1), .., C^(t)` (with `t = k - i + 1`) from an
/// extremal pattern occurrence; the spanning polynomials of the family are
/// linearly dependent, which forces the rank of the weight space below the
/// member count.
///
/// With `j` the smaller and `l` the larger of the two middle values
/// `w_p, w_q`, member `m` keeps every column of `D(w)` except: in column
/// `l` the box in row `k` moves to row `i+m-1`, and in column `j` the box
/// in row `i+m-1` moves to row `i`. The extremal choice of `(i, k)` is what
/// makes those boxes exist.
pub fn dependent_family(
    w: &Permutation,
    occ: &PatternOccurrence,
) -> Result<Vec<Diagram>, OccurrenceError> {
    validate_occurrence(w, occ)?;
    let d = rothe_diagram(w);
    let (j0, l0) = {
        let a = w.at(occ.p);
        let b = w.at(occ.q);
        (a.min(b), a.max(b))
    };
    let t = occ.k - occ.i + 1;
    let mut family = Vec::with_capacity(t);
    for m in 1..=t {
        let row = occ.i + m - 1;
        let mut cols = d.columns().to_vec();

        let cl = &mut cols[l0 - 1];
        let before = cl.len();
        cl.retain(|&r| r != occ.k);
        assert_eq!(cl.len() + 1, before, "row k must sit in column l of D(w)");
        assert!(
            !cl.contains(&row),
            "target row already occupied in column l"
        );
        cl.push(row);
        cl.sort_unstable();

        let cj = &mut cols[j0 - 1];
        assert!(
            !cj.contains(&occ.i),
            "row i must be vacant in column j of D(w)"
        );
        cj.push(occ.i);
        cj.sort_unstable();
        let before = cj.len();
        cj.retain(|&r| r != row);
        assert_eq!(cj.len() + 1, before, "row i+m-1 must sit in column j");

        let c = Diagram::from_sorted(d.n(), cols);
        assert!(
            c.leq(&d),
            "constructed family member must satisfy C <= D(w)"
        );
        family.push(c);
    }
    Ok(family)
}

/// Symbolic check of the alternating dependence identity among the
/// polynomials `g_m(Y) = y_{m,b} * det(Y^{[b] minus m}_{[2,b]})`:
/// `g_b = g_{b-1} - g_{b-2} + .. +- g_1`.
pub fn verify_dependence_identity(b: usize) -> Result<bool, RangeError> {
    verify_dependence_identity_with_guard(b, DEFAULT_DEPENDENCE_GUARD)
}

pub fn verify_dependence_identity_with_guard(b: usize, guard: usize) -> Result<bool, RangeError> {
    assert!(b >= 2, "the identity needs b >= 2");
    if b > guard {
        return Err(RangeError::new(
            "dependence identity size b",
            b as u64,
            guard as u64,
        ));
    }
    let cols: Vec<usize> = (2..=b).collect();
    let g = |m: usize| -> YPoly {
        let rows: Vec<usize> = (1..=b).filter(|&r| r != m).collect();
        &YPoly::var(m, b) * &minor(&rows, &cols)
    };
    let lhs = g(b);
    let mut rhs = YPoly::zero();
    for m in (1..b).rev() {
        let gm = g(m);
        rhs = if (b - 1 - m).is_multiple_of(2) {
            &rhs + &gm
        } else {
            &rhs - &gm
        };
    }
    Ok(lhs == rhs)
}

/// The reduced columns `D'_j = D_j minus [a_j]`, where `a_j` is the largest
/// `a` with `{1..a}` contained in `D_j`.
pub fn reduced_columns(d: &Diagram) -> Vec<Vec<usize>> {
    d.columns()
        .iter()
        .map(|col| {
            let mut a = 0;
            for (idx, &r) in col.iter().enumerate() {
                if r == idx + 1 {
                    a = r;
                } else {
                    break;
                }
            }
            col.iter().copied().filter(|&r| r > a).collect()
        })
        .collect()
}

/// True iff the reduced columns are pairwise disjoint.
pub fn reduced_columns_disjoint(d: &Diagram) -> bool {
    let reduced = reduced_columns(d);
    for j1 in 0..reduced.len() {
        for j2 in j1 + 1..reduced.len() {
            // columns are sorted; a linear merge detects intersection
            let (mut a, mut b) = (0, 0);
            while a < reduced[j1].len() && b < reduced[j2].len() {
                match reduced[j1][a].cmp(&reduced[j2][b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_permutations;
    use crate::combinat::{avoids_schubert_max, Composition};
    use crate::diagrams::skyline_diagram;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    fn diagram(cols: &[&[usize]]) -> Diagram {
        Diagram::new(cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn ymono(factors: &[(usize, usize)]) -> YMonomial {
        factors.iter().fold(YMonomial::one(), |m, &(i, j)| {
            m.times(&YMonomial::var(i, j))
        })
    }

    #[test]
    fn minor_of_upper_triangular_pair() {
        let m = minor(&[2, 3], &[2, 3]);
        assert_eq!(m, YPoly::term(ymono(&[(2, 2), (3, 3)]), BigInt::one()));
    }

    #[test]
    fn minor_with_structural_zero() {
        let m = minor(&[1, 3], &[2, 3]);
        assert_eq!(m, YPoly::term(ymono(&[(1, 2), (3, 3)]), BigInt::one()));
    }

    #[test]
    fn minor_vanishes_without_dominance() {
        assert!(minor(&[2], &[1]).is_zero());
    }

    #[test]
    fn minor_zero_iff_not_dominated() {
        use crate::diagrams::column_leq;
        use itertools::Itertools;
        for size in 1..=3 {
            for rows in (1..=5usize).combinations(size) {
                for cols in (1..=5usize).combinations(size) {
                    let m = minor(&rows, &cols);
                    assert_eq!(m.is_zero(), !column_leq(&rows, &cols), "{rows:?} {cols:?}");
                }
            }
        }
    }

    #[test]
    fn general_two_by_two_minor() {
        // rows {1,2}, cols {2,3}: y12*y23 - y13*y22
        let m = minor(&[1, 2], &[2, 3]);
        let mut expect = YPoly::term(ymono(&[(1, 2), (2, 3)]), BigInt::one());
        expect.add_term(ymono(&[(1, 3), (2, 2)]), -BigInt::one());
        assert_eq!(m, expect);
    }

    #[test]
    fn colliding_members_of_rothe_1432() {
        let d = rothe_diagram(&perm(&[1, 4, 3, 2]));
        let c3 = diagram(&[&[], &[2, 3], &[1], &[]]);
        let c5 = diagram(&[&[], &[1, 3], &[2], &[]]);
        let same = YPoly::term(ymono(&[(1, 2), (2, 2), (3, 3)]), BigInt::one());
        assert_eq!(f_c(&c3, &d), same);
        assert_eq!(f_c(&c5, &d), same);
    }

    #[test]
    fn f_c_of_d_itself_is_diagonal() {
        let d = diagram(&[&[1, 3], &[2], &[], &[4]]);
        let expect = YPoly::term(ymono(&[(1, 1), (3, 3), (2, 2), (4, 4)]), BigInt::one());
        assert_eq!(f_c(&d, &d), expect);
    }

    #[test]
    fn weight_space_of_collision_has_rank_one() {
        let d = rothe_diagram(&perm(&[1, 4, 3, 2]));
        let report = weight_space_rank(&d, &ExponentVec::new(vec![1, 1, 1, 0]));
        assert_eq!(report.members.len(), 2);
        assert_eq!(report.rank, 1);

        let report = weight_space_rank(&d, &ExponentVec::new(vec![2, 1, 0, 0]));
        assert_eq!(report.members.len(), 1);
        assert_eq!(report.rank, 1);

        let report = weight_space_rank(&d, &ExponentVec::new(vec![0, 0, 0, 4]));
        assert!(report.members.is_empty());
        assert_eq!(report.rank, 0);
    }

    #[test]
    fn dual_character_of_rothe_1432_is_the_schubert_polynomial() {
        let d = rothe_diagram(&perm(&[1, 4, 3, 2]));
        assert_eq!(
            dual_character(&d),
            crate::characters::schubert_poly(&perm(&[1, 4, 3, 2]))
        );
    }

    #[test]
    fn dual_character_of_skyline_is_the_key_polynomial() {
        let a = Composition::new(vec![0, 2]);
        assert_eq!(
            dual_character(&skyline_diagram(&a)),
            crate::characters::key_poly(&a)
        );
    }

    #[test]
    fn dual_character_of_empty_diagram_is_one() {
        assert_eq!(dual_character(&Diagram::empty(3)), Poly::one(3));
    }

    #[test]
    fn dependent_family_of_1432() {
        let w = perm(&[1, 4, 3, 2]);
        let occ = PatternOccurrence::new(1, 2, 3, 4);
        let family = dependent_family(&w, &occ).unwrap();
        assert_eq!(
            family,
            vec![
                diagram(&[&[], &[2, 3], &[1], &[]]),
                diagram(&[&[], &[1, 3], &[2], &[]]),
            ]
        );
        let d = rothe_diagram(&w);
        assert!(family.iter().all(|c| c.leq(&d)));
        let polys: Vec<YPoly> = family.iter().map(|c| f_c(c, &d)).collect();
        assert_eq!(ypoly_rank(&polys), 1);
    }

    #[test]
    fn dependent_family_rejects_bad_occurrences() {
        let w = perm(&[1, 4, 3, 2]);
        assert!(matches!(
            dependent_family(&w, &PatternOccurrence::new(1, 3, 2, 4)),
            Err(OccurrenceError::OutOfRange(..))
        ));
        let v = perm(&[2, 1, 5, 4, 3]);
        // (1,3,4,5) is an occurrence but i is not extremal: i=2 works too
        assert!(matches!(
            dependent_family(&v, &PatternOccurrence::new(1, 3, 4, 5)),
            Err(OccurrenceError::NotExtremal(..))
        ));
        let u = perm(&[1, 2, 3, 4]);
        assert!(matches!(
            dependent_family(&u, &PatternOccurrence::new(1, 2, 3, 4)),
            Err(OccurrenceError::NotAnOccurrence(..))
        ));
    }

    #[test]
    fn extremal_occurrence_of_13524() {
        // occurrences of the union pattern: only (1,3,4,5); t = 3
        let w = perm(&[1, 3, 5, 2, 4]);
        let occ = find_extremal_occurrence(&w).unwrap();
        assert_eq!(occ, PatternOccurrence::new(1, 3, 4, 5));
        let family = dependent_family(&w, &occ).unwrap();
        assert_eq!(family.len(), 3);
        let d = rothe_diagram(&w);
        let polys: Vec<YPoly> = family.iter().map(|c| f_c(c, &d)).collect();
        assert_eq!(ypoly_rank(&polys), 2);
    }

    #[test]
    fn dependence_identity_small_cases() {
        // b = 2: g_2 = y22*y12 and g_1 = y12*y22 by hand
        assert!(verify_dependence_identity(2).unwrap());
        assert!(verify_dependence_identity(3).unwrap());
        assert!(verify_dependence_identity(4).unwrap());
        assert!(verify_dependence_identity(8).is_err());
        assert!(verify_dependence_identity_with_guard(8, 8).unwrap());
    }

    #[test]
    fn reduced_columns_of_rothe_1432_intersect() {
        let d = rothe_diagram(&perm(&[1, 4, 3, 2]));
        assert_eq!(
            reduced_columns(&d),
            vec![vec![], vec![2, 3], vec![2], vec![]]
        );
        assert!(!reduced_columns_disjoint(&d));
    }

    #[test]
    fn reduced_columns_strip_complete_prefixes() {
        let d = diagram(&[&[1, 2, 4], &[2], &[1, 2, 3], &[]]);
        assert_eq!(reduced_columns(&d), vec![vec![4], vec![2], vec![], vec![]]);
    }

    #[test]
    fn avoiders_in_s4_have_disjoint_reduced_columns() {
        for w in enumerate_permutations(4).unwrap() {
            let d = rothe_diagram(&w);
            if avoids_schubert_max(&w) {
                assert!(reduced_columns_disjoint(&d), "w={w}");
            } else {
                assert!(!reduced_columns_disjoint(&d), "w={w}");
            }
        }
    }

    #[test]
    fn empty_diagram_is_trivially_disjoint() {
        assert!(reduced_columns_disjoint(&Diagram::empty(4)));
    }

    #[test]
    fn rank_of_known_matrices() {
        let m = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(bigint_matrix_rank(m), 2);
        assert_eq!(bigint_matrix_rank(vec![]), 0);
        assert_eq!(
            bigint_matrix_rank(vec![vec![BigInt::zero(), BigInt::zero()]]),
            0
        );
    }
}
