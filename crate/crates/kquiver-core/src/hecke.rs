//! Words in the adjacent transpositions and their Demazure (0-Hecke)
//! products.
//!
//! The product is folded directly on permutations: `s_i` acts only when
//! it increases length, so each letter costs linear time and no word
//! rewriting is needed.

use alloc::vec::Vec;

use crate::perm::Perm;

/// A word in the generators `s_1, s_2, ...`; letters are 1-based.
pub type Word = Vec<u32>;

/// `v * s_i` if that is longer than `v`, else `v`.
pub fn demazure_step(v: &Perm, i: u32) -> Perm {
    if v.has_descent(i) {
        v.clone()
    } else {
        v.right_mul_adjacent(i)
    }
}

/// Left fold of [`demazure_step`] over the word, starting at the identity.
pub fn demazure_product(word: &[u32]) -> Perm {
    let mut v = Perm::identity();
    for &i in word {
        v = demazure_step(&v, i);
    }
    v
}

/// Demazure products of every initial string of the word, including the
/// empty prefix; the result has `word.len() + 1` entries.
pub fn prefix_products(word: &[u32]) -> Vec<Perm> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut v = Perm::identity();
    out.push(v.clone());
    for &i in word {
        v = demazure_step(&v, i);
        out.push(v.clone());
    }
    out
}

/// Positions (0-based) of the lexicographically first subword with the
/// same Demazure product: position `t` is dropped exactly when the
/// Demazure products of the prefixes of lengths `t` and `t+1` agree.
/// The retained subword is reduced.
pub fn simplify_retained(word: &[u32]) -> Vec<usize> {
    let prefixes = prefix_products(word);
    (0..word.len())
        .filter(|&t| prefixes[t] != prefixes[t + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demazure_step_examples() {
        assert_eq!(
            demazure_step(&Perm::identity(), 1),
            Perm::transposition(1)
        );
        // Idempotence: s_1 * s_1 = s_1.
        assert_eq!(
            demazure_step(&Perm::transposition(1), 1),
            Perm::transposition(1)
        );
        assert_eq!(
            demazure_step(&Perm::from_images(&[2, 1, 3]).unwrap(), 2),
            Perm::from_images(&[2, 3, 1]).unwrap()
        );
    }

    #[test]
    fn demazure_product_examples() {
        assert_eq!(demazure_product(&[]), Perm::identity());
        assert_eq!(demazure_product(&[1, 2, 1]), Perm::longest(3));
        assert_eq!(demazure_product(&[1, 2, 1, 2]), Perm::longest(3));
    }

    #[test]
    fn prefix_products_examples() {
        assert_eq!(prefix_products(&[]), vec![Perm::identity()]);
        let s1 = Perm::transposition(1);
        assert_eq!(
            prefix_products(&[1, 1]),
            vec![Perm::identity(), s1.clone(), s1]
        );
        assert_eq!(
            prefix_products(&[2, 1, 2]),
            vec![
                Perm::identity(),
                Perm::from_images(&[1, 3, 2]).unwrap(),
                Perm::from_images(&[3, 1, 2]).unwrap(),
                Perm::longest(3),
            ]
        );
    }

    #[test]
    fn simplify_examples() {
        assert_eq!(simplify_retained(&[2, 1]), vec![0, 1]);
        assert_eq!(simplify_retained(&[1, 1]), vec![0]);
        assert_eq!(simplify_retained(&[1, 2, 1, 2]), vec![0, 1, 2]);
    }

    #[test]
    fn simplified_subword_is_reduced_with_same_product() {
        for word in all_words(5, 3) {
            let kept = simplify_retained(&word);
            let sub: Vec<u32> = kept.iter().map(|&t| word[t]).collect();
            let target = demazure_product(&word);
            assert_eq!(demazure_product(&sub), target);
            assert_eq!(sub.len() as u64, target.length());
        }
    }

    #[test]
    fn product_dominates_prefixes() {
        for word in all_words(5, 3) {
            let total = demazure_product(&word);
            for prefix in prefix_products(&word) {
                assert!(prefix.bruhat_leq(&total), "word={word:?}");
            }
        }
    }

    #[test]
    fn braid_and_commutation_invariance() {
        for word in all_words(6, 3) {
            let value = demazure_product(&word);
            for t in 0..word.len() {
                // Commutations.
                if t + 1 < word.len() {
                    let (a, b) = (word[t], word[t + 1]);
                    if a.abs_diff(b) >= 2 {
                        let mut moved = word.clone();
                        moved.swap(t, t + 1);
                        assert_eq!(demazure_product(&moved), value);
                    }
                }
                // Braid moves.
                if t + 2 < word.len() {
                    let (a, b, c) = (word[t], word[t + 1], word[t + 2]);
                    if a == c && b.abs_diff(a) == 1 {
                        let mut moved = word.clone();
                        moved[t] = b;
                        moved[t + 1] = a;
                        moved[t + 2] = b;
                        assert_eq!(demazure_product(&moved), value);
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_through_reduced_words() {
        for w1 in all_words(3, 3) {
            for w2 in all_words(3, 3) {
                let mut joined = w1.clone();
                joined.extend_from_slice(&w2);
                let mut replaced = demazure_product(&w1).reduced_word();
                replaced.extend_from_slice(&w2);
                assert_eq!(demazure_product(&joined), demazure_product(&replaced));
            }
        }
    }

    fn all_words(max_len: usize, max_gen: u32) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in 1..=max_gen {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}
