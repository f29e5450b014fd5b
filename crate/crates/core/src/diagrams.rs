//! Box diagrams, Schubert-matroid column dominance, and the Min/Max bound
//! polynomials.
//!
//! A diagram is an ordered list of `n` columns, each a subset of `{1..n}`
//! of row indices. The sub-diagrams `C <= D` (columnwise Gale dominance)
//! are the bases of the Schubert matroids of the columns; summing `x^C`
//! over them, with or without multiplicity, gives the upper and lower bound
//! polynomials of the dual character of `D`.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{Composition, Permutation};
use crate::error::InvalidDiagram;
use crate::polyring::ExponentVec;
use crate::Poly;

/// An ordered list of `n` columns, each a sorted subset of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl Diagram {
    /// Builds a diagram from raw columns; the grid size is the column count.
    /// Row entries are deduplicated and sorted.
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self, InvalidDiagram> {
        let n = columns.len();
        if n == 0 {
            return Err(InvalidDiagram {
                reason: "a diagram needs at least one column".into(),
            });
        }
        let mut sorted = Vec::with_capacity(n);
        for (j, col) in columns.into_iter().enumerate() {
            for &i in &col {
                if i == 0 || i > n {
                    return Err(InvalidDiagram {
                        reason: format!("row {i} in column {} out of range 1..={n}", j + 1),
                    });
                }
            }
            let mut col = col;
            col.sort_unstable();
            col.dedup();
            sorted.push(col);
        }
        Ok(Diagram { n, columns: sorted })
    }

    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            columns: vec![Vec::new(); n],
        }
    }

    pub(crate) fn from_sorted(n: usize, columns: Vec<Vec<usize>>) -> Self {
        debug_assert!(columns.len() == n);
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]) && c.iter().all(|&i| i >= 1 && i <= n)));
        Diagram { n, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 1]
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Columnwise dominance `self <= other`.
    pub fn leq(&self, other: &Diagram) -> bool {
        self.n == other.n
            && self
                .columns
                .iter()
                .zip(&other.columns)
                .all(|(c, d)| column_leq(c, d))
    }

    /// The monomial exponent of the diagram: exponent of `x_i` is the
    /// number of columns containing row `i`.
    pub fn monomial(&self) -> ExponentVec {
        let mut e = vec![0u32; self.n];
        for col in &self.columns {
            for &i in col {
                e[i - 1] += 1;
            }
        }
        ExponentVec::new(e)
    }
}

impl std::fmt::Display for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (j, col) in self.columns.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (k, i) in col.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Rothe diagram of a permutation: column `j` holds the rows `i` with
/// `w_i > j` and `i < w^{-1}(j)`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.len();
    let inv = w.inverse();
    let columns = (1..=n)
        .map(|j| {
            (1..inv.at(j))
                .filter(|&i| w.at(i) > j)
                .collect::<Vec<usize>>()
        })
        .collect();
    Diagram::from_sorted(n, columns)
}

/// Skyline diagram of a composition: row `i` holds the first `a_i` boxes.
/// The grid size is `max(len, max part)` so every box fits.
pub fn skyline_diagram(a: &Composition) -> Diagram {
    let n = a.len().max(a.max_part() as usize).max(1);
    let columns = (1..=n)
        .map(|j| {
            a.parts()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p as usize >= j)
                .map(|(i, _)| i + 1)
                .collect::<Vec<usize>>()
        })
        .collect();
    Diagram::from_sorted(n, columns)
}

/// Gale dominance of columns: equal size and the k-th least element of `c`
/// at most the k-th least element of `d`. Inputs must be sorted.
pub fn column_leq(c: &[usize], d: &[usize]) -> bool {
    c.len() == d.len() && c.iter().zip(d).all(|(a, b)| a <= b)
}

/// All columns `c <= d` in lexicographic order, by recursive descent:
/// the k-th element ranges over `{prev+1, .., d[k]}`.
pub fn column_bases(d: &[usize]) -> Vec<Vec<usize>> {
    fn rec(d: &[usize], k: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == d.len() {
            out.push(cur.clone());
            return;
        }
        for v in prev + 1..=d[k] {
            cur.push(v);
            rec(d, k + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, 0, 0, &mut Vec::with_capacity(d.len()), &mut out);
    out
}

/// Number of sub-diagrams `C <= D`: the product over columns of the basis
/// counts.
pub fn count_sub_diagrams(d: &Diagram) -> u128 {
    d.columns()
        .iter()
        .map(|c| column_bases(c).len() as u128)
        .product()
}

/// Iterator over all `C <= D`, columns left to right most significant,
/// bases of each column in lexicographic order.
pub fn enumerate_sub_diagrams(d: &Diagram) -> SubDiagrams {
    let bases: Vec<Vec<Vec<usize>>> = d.columns().iter().map(|c| column_bases(c)).collect();
    SubDiagrams {
        n: d.n(),
        indices: vec![0; bases.len()],
        bases,
        done: false,
    }
}

pub struct SubDiagrams {
    n: usize,
    bases: Vec<Vec<Vec<usize>>>,
    indices: Vec<usize>,
    done: bool,
}

impl Iterator for SubDiagrams {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        if self.done {
            return None;
        }
        let columns = self
            .indices
            .iter()
            .zip(&self.bases)
            .map(|(&i, b)| b[i].clone())
            .collect();
        // advance odometer, rightmost column fastest
        let mut pos = self.indices.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.indices[pos] += 1;
            if self.indices[pos] < self.bases[pos].len() {
                break;
            }
            self.indices[pos] = 0;
        }
        Some(Diagram::from_sorted(self.n, columns))
    }
}

/// Sum of the distinct monomials `x^C` over `C <= D` (all coefficients one).
pub fn min_poly(d: &Diagram) -> Poly {
    max_poly(d).support_to_ones()
}

/// Sum of `x^C` over `C <= D` with multiplicity.
///
/// Columns choose independently, so the sum factors as the product over
/// columns of their basis generating polynomials; the brute-force sum over
/// `enumerate_sub_diagrams` is kept as a test oracle.
pub fn max_poly(d: &Diagram) -> Poly {
    let n = d.n();
    let mut acc = Poly::one(n);
    for col in d.columns() {
        if col.is_empty() {
            continue;
        }
        let mut colpoly = Poly::zero(n);
        for basis in column_bases(col) {
            let mut e = vec![0u32; n];
            for &i in &basis {
                e[i - 1] += 1;
            }
            colpoly.add_term(ExponentVec::new(e), BigInt::one());
        }
        acc = &acc * &colpoly;
    }
    acc
}
