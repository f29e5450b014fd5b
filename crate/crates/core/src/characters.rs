//! Schubert polynomials via divided differences and key polynomials via
//! Demazure operators.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{Composition, Permutation};
use crate::polyring::ExponentVec;
use crate::Poly;

/// Memoizing Schubert-polynomial computer.
///
/// The recursion walks ascents up to the longest element, so sweeping a whole
/// symmetric group reuses every intermediate polynomial. The cache is not
/// synchronized; give each worker its own instance.
#[derive(Debug, Default)]
pub struct SchubertCache {
    memo: HashMap<Vec<usize>, Poly>,
}

impl SchubertCache {
    pub fn new() -> Self {
        SchubertCache::default()
    }

    /// The Schubert polynomial of `w`, in ambient variables `x_1..x_n` with
    /// `n = |w|`.
    pub fn schubert(&mut self, w: &Permutation) -> Poly {
        if let Some(p) = self.memo.get(w.word()) {
            return p.clone();
        }
        let n = w.len();
        let poly = match w.first_ascent() {
            None => {
                // longest element: x1^{n-1} x2^{n-2} .. x_{n-1}
                let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
                Poly::monomial(ExponentVec::new(exps), BigInt::one())
            }
            Some(i) => self.schubert(&w.swap_positions(i)).divided_difference(i),
        };
        self.memo.insert(w.word().to_vec(), poly.clone());
        poly
    }
}

/// One-shot Schubert polynomial (fresh cache).
pub fn schubert_poly(w: &Permutation) -> Poly {
    SchubertCache::new().schubert(w)
}

/// The key polynomial (Demazure character) of a composition, in ambient
/// variables `x_1..x_n` with `n = max(len, max part)` so that it lives in
/// the same ring as the polynomials of its skyline diagram.
pub fn key_poly(a: &Composition) -> Poly {
    let n = a.len().max(a.max_part() as usize).max(1);
    key_rec(a.parts(), n)
}

fn key_rec(parts: &[u32], n: usize) -> Poly {
    match first_composition_ascent(parts) {
        None => {
            // partition case: a single monomial
            let mut exps = vec![0u32; n];
            exps[..parts.len()].copy_from_slice(parts);
            Poly::monomial(ExponentVec::new(exps), BigInt::one())
        }
        Some(i) => {
            let mut swapped = parts.to_vec();
            swapped.swap(i - 1, i);
            key_rec(&swapped, n).demazure(i)
        }
    }
}

fn first_composition_ascent(parts: &[u32]) -> Option<usize> {
    (1..parts.len()).find(|&i| parts[i - 1] < parts[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_permutations;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(
            n,
            terms
                .iter()
                .map(|(e, c)| (ExponentVec::new(e.to_vec()), BigInt::from(*c))),
        )
    }

    #[test]
    fn longest_element_base_case() {
        assert_eq!(
            schubert_poly(&perm(&[3, 2, 1])),
            poly(3, &[(&[2, 1, 0], 1)])
        );
    }

    #[test]
    fn schubert_of_1432() {
        let expect = poly(
            4,
            &[
                (&[2, 1, 0, 0], 1),
                (&[2, 0, 1, 0], 1),
                (&[1, 1, 1, 0], 1),
                (&[1, 2, 0, 0], 1),
                (&[0, 2, 1, 0], 1),
            ],
        );
        assert_eq!(schubert_poly(&perm(&[1, 4, 3, 2])), expect);
    }

    #[test]
    fn schubert_of_identity_is_one() {
        assert_eq!(schubert_poly(&Permutation::identity(4)), Poly::one(4));
    }

    #[test]
    fn schubert_is_homogeneous_of_inversion_degree() {
        let mut cache = SchubertCache::new();
        for w in enumerate_permutations(5).unwrap() {
            let s = cache.schubert(&w);
            assert_eq!(s.homogeneous_degree(), Some(w.inversions() as u32));
        }
    }

    #[test]
    fn schubert_independent_of_ascent_choice() {
        let mut cache = SchubertCache::new();
        for w in enumerate_permutations(4).unwrap() {
            let s = cache.schubert(&w);
            for i in w.ascents() {
                let via_i = cache.schubert(&w.swap_positions(i)).divided_difference(i);
                assert_eq!(via_i, s, "w={w} ascent {i}");
            }
        }
    }

    #[test]
    fn key_of_partition_is_monomial() {
        assert_eq!(
            key_poly(&Composition::new(vec![2, 0])),
            poly(2, &[(&[2, 0], 1)])
        );
    }

    #[test]
    fn key_of_zero_two() {
        let expect = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(key_poly(&Composition::new(vec![0, 2])), expect);
    }

    #[test]
    fn key_zero_two_matches_schubert_1423() {
        let k = key_poly(&Composition::new(vec![0, 2])).extended(4);
        assert_eq!(k, schubert_poly(&perm(&[1, 4, 2, 3])));
    }

    #[test]
    fn key_is_homogeneous_of_weight_degree() {
        for a in crate::combinat::enumerate_compositions(3, 3).unwrap() {
            let k = key_poly(&a);
            assert_eq!(k.homogeneous_degree(), Some(a.weight()), "a={a}");
        }
    }

    #[test]
    fn key_independent_of_ascent_choice() {
        for a in crate::combinat::enumerate_compositions(4, 3).unwrap() {
            let k = key_poly(&a);
            let n = a.len().max(a.max_part() as usize).max(1);
            for i in 1..a.len() {
                if a.parts()[i - 1] < a.parts()[i] {
                    let mut swapped = a.parts().to_vec();
                    swapped.swap(i - 1, i);
                    let via_i = key_rec(&swapped, n).demazure(i);
                    assert_eq!(via_i, k, "a={a} ascent {i}");
                }
            }
        }
    }
}
