//! Permutations, compositions, and pattern containment for both.
//!
//! The fixed pattern lists that characterize when a Schubert or key
//! polynomial attains its diagram bound live here, together with the large
//! Schroeder numbers used to cross-check the avoider count.

use itertools::Itertools;

use crate::error::{InvalidPermutation, RangeError};

/// Default cap for exhaustive enumeration (`n!` grows fast).
pub const DEFAULT_ENUMERATION_GUARD: usize = 9;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn from_word(word: Vec<usize>) -> Result<Self, InvalidPermutation> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n {
                return Err(InvalidPermutation {
                    reason: format!("letter {v} out of range 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(InvalidPermutation {
                    reason: format!("letter {v} repeated"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n, n-1, .., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    pub fn inversions(&self) -> usize {
        let n = self.word.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by the simple transposition `s_i`: swaps the
    /// letters at positions `i` and `i+1` (1-based).
    pub fn swap_positions(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.word.len(), "position {i} out of range");
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Smallest 1-based `i` with `w_i < w_{i+1}`, if any.
    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.word.len()).find(|&i| self.word[i - 1] < self.word[i])
    }

    pub fn ascents(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i - 1] < self.word[i])
            .collect()
    }

    /// True iff some subsequence of `self` is order-isomorphic to `p`.
    ///
    /// Backtracking over index subsequences; a partial choice is abandoned
    /// as soon as one pairwise comparison disagrees with the pattern.
    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        let m = p.len();
        if m > self.len() {
            return false;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        self.search_pattern(p, 0, &mut chosen)
    }

    fn search_pattern(&self, p: &Permutation, start: usize, chosen: &mut Vec<usize>) -> bool {
        let t = chosen.len();
        if t == p.len() {
            return true;
        }
        let remaining = p.len() - t;
        for pos in start..=self.len().saturating_sub(remaining) {
            let v = self.word[pos];
            let consistent = (0..t).all(|s| (chosen[s] < v) == (p.word[s] < p.word[t]));
            if consistent {
                chosen.push(v);
                if self.search_pattern(p, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.word.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(","))
        }
    }
}

/// A composition: a sequence of nonnegative integer parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Weakly decreasing?
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Composition pattern containment: indices `i_1 < .. < i_m` such that
    /// for every pair `s, t` the parts compare exactly as the pattern parts
    /// do (equalities match equalities) and the gaps are at least as large.
    pub fn contains_pattern(&self, b: &Composition) -> bool {
        let m = b.len();
        if m > self.len() {
            return false;
        }
        let mut chosen: Vec<u32> = Vec::with_capacity(m);
        self.search_pattern(b, 0, &mut chosen)
    }

    fn search_pattern(&self, b: &Composition, start: usize, chosen: &mut Vec<u32>) -> bool {
        let t = chosen.len();
        if t == b.len() {
            return true;
        }
        let remaining = b.len() - t;
        for pos in start..=self.len().saturating_sub(remaining) {
            let v = self.parts[pos];
            let consistent = (0..t).all(|s| {
                let a_s = chosen[s];
                a_s.cmp(&v) == b.parts[s].cmp(&b.parts[t])
                    && a_s.abs_diff(v) >= b.parts[s].abs_diff(b.parts[t])
            });
            if consistent {
                chosen.push(v);
                if self.search_pattern(b, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn avoids_all(&self, patterns: &[Composition]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

fn perm(word: &[usize]) -> Permutation {
    Permutation::from_word(word.to_vec()).expect("fixed pattern is a valid permutation")
}

/// The two patterns whose avoidance characterizes Schubert polynomials that
/// attain their upper bound: 1432 and 1423.
pub fn schubert_max_patterns() -> Vec<Permutation> {
    vec![perm(&[1, 4, 3, 2]), perm(&[1, 4, 2, 3])]
}

/// The twelve patterns whose avoidance characterizes Schubert polynomials
/// that attain their lower bound.
pub fn schubert_min_patterns() -> Vec<Permutation> {
    vec![
        perm(&[1, 2, 5, 4, 3]),
        perm(&[1, 3, 2, 5, 4]),
        perm(&[1, 3, 5, 2, 4]),
        perm(&[1, 3, 5, 4, 2]),
        perm(&[2, 1, 5, 4, 3]),
        perm(&[1, 2, 5, 3, 6, 4]),
        perm(&[1, 2, 5, 6, 3, 4]),
        perm(&[2, 1, 5, 3, 6, 4]),
        perm(&[2, 1, 5, 6, 3, 4]),
        perm(&[3, 1, 5, 2, 6, 4]),
        perm(&[3, 1, 5, 6, 2, 4]),
        perm(&[3, 1, 5, 6, 4, 2]),
    ]
}

/// The single composition pattern for the key upper bound: `(0, 2)`.
pub fn key_max_patterns() -> Vec<Composition> {
    vec![Composition::new(vec![0, 2])]
}

/// The five composition patterns for the key lower bound.
pub fn key_min_patterns() -> Vec<Composition> {
    vec![
        Composition::new(vec![0, 1, 2]),
        Composition::new(vec![0, 0, 2, 2]),
        Composition::new(vec![0, 0, 2, 1]),
        Composition::new(vec![1, 0, 3, 2]),
        Composition::new(vec![1, 0, 2, 2]),
    ]
}

pub fn avoids_schubert_max(w: &Permutation) -> bool {
    w.avoids_all(&schubert_max_patterns())
}

pub fn avoids_schubert_min(w: &Permutation) -> bool {
    w.avoids_all(&schubert_min_patterns())
}

pub fn avoids_key_max(a: &Composition) -> bool {
    a.avoids_all(&key_max_patterns())
}

pub fn avoids_key_min(a: &Composition) -> bool {
    a.avoids_all(&key_min_patterns())
}

/// Number of permutations of `{1..n}` avoiding both 1432 and 1423.
///
/// Exhaustive count; cross-checked against `schroeder(n-1)`, which is
/// computed by an independent recurrence.
pub fn count_max_avoiders(n: usize) -> u64 {
    assert!(n >= 1, "n must be at least 1");
    let patterns = schubert_max_patterns();
    let mut count = 0;
    for word in (1..=n).permutations(n) {
        let w = Permutation { word };
        if w.avoids_all(&patterns) {
            count += 1;
        }
    }
    count
}

/// Large Schroeder number `r_k` (`r_0 = 1, r_1 = 2, r_2 = 6, ..`).
///
/// Division-free convolution recurrence
/// `r_k = r_{k-1} + sum_{j=0}^{k-1} r_j * r_{k-1-j}`.
pub fn schroeder(k: usize) -> u64 {
    let mut r = Vec::with_capacity(k + 1);
    r.push(1u64);
    for m in 1..=k {
        let mut v = r[m - 1];
        for j in 0..m {
            v = v
                .checked_add(r[j].checked_mul(r[m - 1 - j]).expect("schroeder overflow"))
                .expect("schroeder overflow");
        }
        r.push(v);
    }
    r[k]
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Result<impl Iterator<Item = Permutation>, RangeError> {
    enumerate_permutations_with_guard(n, DEFAULT_ENUMERATION_GUARD)
}

pub fn enumerate_permutations_with_guard(
    n: usize,
    guard: usize,
) -> Result<impl Iterator<Item = Permutation>, RangeError> {
    if n > guard {
        return Err(RangeError::new(
            "permutation size n",
            n as u64,
            guard as u64,
        ));
    }
    Ok((1..=n).permutations(n).map(|word| Permutation { word }))
}

/// All compositions of the given length with parts in `0..=max_part`, in
/// lexicographic order.
pub fn enumerate_compositions(
    len: usize,
    max_part: u32,
) -> Result<impl Iterator<Item = Composition>, RangeError> {
    enumerate_compositions_with_guard(len, max_part, DEFAULT_ENUMERATION_GUARD)
}

pub fn enumerate_compositions_with_guard(
    len: usize,
    max_part: u32,
    guard: usize,
) -> Result<impl Iterator<Item = Composition>, RangeError> {
    if len > guard {
        return Err(RangeError::new(
            "composition length",
            len as u64,
            guard as u64,
        ));
    }
    if max_part as usize > guard {
        return Err(RangeError::new(
            "composition max part",
            max_part as u64,
            guard as u64,
        ));
    }
    Ok(CompositionIter {
        next: Some(vec![0; len]),
        max_part,
    })
}

struct CompositionIter {
    next: Option<Vec<u32>>,
    max_part: u32,
}

impl Iterator for CompositionIter {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // advance like a base-(max_part+1) odometer, least significant last
        let mut following = current.clone();
        let mut pos = following.len();
        loop {
            if pos == 0 {
                break; // rolled over, iteration ends
            }
            pos -= 1;
            if following[pos] < self.max_part {
                following[pos] += 1;
                for v in &mut following[pos + 1..] {
                    *v = 0;
                }
                self.next = Some(following);
                break;
            }
        }
        Some(Composition::new(current))
    }
}
