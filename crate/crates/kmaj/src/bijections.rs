//! Involutive adjacent-letter swaps and the maj-transfer bijections built
//! from them.
//!
//! For a step `k >= 2` and an anchor position `j`, [`gamma_index_set`]
//! selects a decreasing chain of positions `j-k, j-2k, ...` by a splitting
//! rule, and [`gamma`] swaps `w_i <-> w_{i+1}` at every selected position.
//! Composing these swaps over `j = 1..=n` gives [`phi`], which carries
//! `maj_{k-1}` to `maj_k`; [`psi`] is its inverse. Chaining [`phi`] over a
//! range of steps ([`phi_range`]) carries the major index all the way to the
//! inversion number, along a different route than the classical second
//! fundamental transformation ([`foata`]).

use crate::word::{splits, Word};
use crate::{Error, Result};

/// The chain of swap anchors selected at position `j` with step `k`.
///
/// Every element `i` satisfies `1 <= i <= j - k` and `j - i` is a positive
/// multiple of `k`; the indices are stored in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaIndexSet {
    indices: Vec<usize>,
    j: usize,
    k: usize,
    word_len: usize,
}

impl GammaIndexSet {
    /// The selected anchors, in decreasing order.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Compute the swap-anchor chain at position `j` with step `k >= 2`.
///
/// `j - k` enters iff `w_j` splits the pair `(w_{j-k}, w_{j-k+1})`; below an
/// anchor `i`, the next anchor `i - k` enters iff exactly one of `w_i`,
/// `w_{i+1}` splits `(w_{i-k}, w_{i-k+1})`. The chain stops at the first
/// failure or when it would leave the word. `j <= k` yields the empty set.
pub fn gamma_index_set(w: &Word, j: usize, k: usize) -> GammaIndexSet {
    assert!(k >= 2, "gamma requires k >= 2");
    assert!(j >= 1 && j <= w.len(), "position j out of range");
    let mut indices = Vec::new();
    if j > k && splits(w.letter(j), w.letter(j - k), w.letter(j - k + 1)) {
        indices.push(j - k);
        let mut i = j - k;
        while i > k {
            let lower = splits(w.letter(i), w.letter(i - k), w.letter(i - k + 1));
            let upper = splits(w.letter(i + 1), w.letter(i - k), w.letter(i - k + 1));
            if lower == upper {
                break;
            }
            indices.push(i - k);
            i -= k;
        }
    }
    GammaIndexSet {
        indices,
        j,
        k,
        word_len: w.len(),
    }
}

/// Swap `w_i <-> w_{i+1}` for every anchor `i` selected at `(j, k)`.
///
/// The anchors are at least `k >= 2` apart, so the swaps are disjoint and
/// the whole chain is computed before any swap is applied. The map is an
/// involution for each `(j, k)`, and spacers are never moved because a
/// spacer splits nothing and is split by nothing.
pub fn gamma(w: &Word, j: usize, k: usize) -> Word {
    let chain = gamma_index_set(w, j, k);
    apply_swaps(w, chain.indices())
}

fn apply_swaps(w: &Word, anchors: &[usize]) -> Word {
    let mut letters = w.letters().to_vec();
    for &i in anchors {
        letters.swap(i - 1, i);
    }
    Word::from_vec_unchecked(letters)
}

/// The maj-transfer bijection at step `k >= 2`: the composition of
/// [`gamma`] over `j = 1..=n`, applied left to right.
///
/// Satisfies `maj_{k-1}(w) = maj_k(phi(w, k))`, permutes the words on a
/// fixed multiset with fixed spacer positions, and fixes the last `k - 1`
/// letters.
pub fn phi(w: &Word, k: usize) -> Word {
    assert!(k >= 2, "phi requires k >= 2");
    let mut cur = w.clone();
    // gamma at j <= k is the identity, so start the composition at k + 1.
    for j in (k + 1)..=w.len() {
        cur = gamma(&cur, j, k);
    }
    cur
}

/// The two-sided inverse of [`phi`]: the same swaps composed in the
/// opposite order, `j = n..=1`.
pub fn psi(w: &Word, k: usize) -> Word {
    assert!(k >= 2, "psi requires k >= 2");
    let mut cur = w.clone();
    for j in ((k + 1)..=w.len()).rev() {
        cur = gamma(&cur, j, k);
    }
    cur
}

/// The composition `phi(.., i) ∘ ... ∘ phi(.., h+1)`, carrying `maj_h` to
/// `maj_i`. Requires `1 <= h < i`.
pub fn phi_range(w: &Word, i: usize, h: usize) -> Result<Word> {
    if h < 1 || h >= i {
        return Err(Error::InvalidArgument(format!(
            "phi_range requires 1 <= h < i, got i={i}, h={h}"
        )));
    }
    let mut cur = w.clone();
    for k in (h + 1)..=i {
        cur = phi(&cur, k);
    }
    Ok(cur)
}

/// The inverse of [`phi_range`]: `psi(.., h+1) ∘ ... ∘ psi(.., i)`.
pub fn psi_range(w: &Word, i: usize, h: usize) -> Result<Word> {
    if h < 1 || h >= i {
        return Err(Error::InvalidArgument(format!(
            "psi_range requires 1 <= h < i, got i={i}, h={h}"
        )));
    }
    let mut cur = w.clone();
    for k in ((h + 1)..=i).rev() {
        cur = psi(&cur, k);
    }
    Ok(cur)
}

/// The classical second fundamental transformation, satisfying
/// `maj(w) = inv(foata(w))`. Kept as an independent reference point for the
/// transfer bijections; rejects words with spacers.
pub fn foata(w: &Word) -> Result<Word> {
    if w.has_spacers() {
        return Err(Error::InvalidArgument(
            "foata is defined on spacer-free words".into(),
        ));
    }
    let values: Vec<u32> = w.letters().iter().map(|l| l.value().unwrap()).collect();
    let mut acc: Vec<u32> = Vec::with_capacity(values.len());
    for &x in &values {
        if !acc.is_empty() {
            // Factor the prefix so that each block ends with a letter that
            // compares to x the same way the current last letter does, then
            // rotate each block's last letter to its front.
            let ends_low = *acc.last().unwrap() <= x;
            let mut rebuilt = Vec::with_capacity(acc.len());
            let mut block: Vec<u32> = Vec::new();
            for &y in &acc {
                block.push(y);
                if (y <= x) == ends_low {
                    let last = block.pop().unwrap();
                    rebuilt.push(last);
                    rebuilt.append(&mut block);
                }
            }
            debug_assert!(block.is_empty());
            acc = rebuilt;
        }
        acc.push(x);
    }
    Word::from_ints(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{all_permutations, words_on, Multiset};
    use std::collections::BTreeSet;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    #[test]
    fn gamma_chain_running_example() {
        assert_eq!(gamma_index_set(&w("986173245"), 8, 3).indices(), &[5, 2]);
    }

    #[test]
    fn gamma_chain_empty_for_small_j() {
        for j in 1..=3 {
            assert!(gamma_index_set(&w("986173245"), j, 3).is_empty());
        }
    }

    #[test]
    fn gamma_chain_first_step_of_phi_table() {
        assert_eq!(gamma_index_set(&w("693817245"), 4, 3).indices(), &[1]);
    }

    #[test]
    fn gamma_running_example() {
        assert_eq!(gamma(&w("986173245"), 8, 3), w("968137245"));
    }

    #[test]
    fn gamma_identity_when_chain_empty() {
        let v = w("986173245");
        assert_eq!(gamma(&v, 2, 3), v);
        assert_eq!(gamma(&v, 9, 3), v);
    }

    #[test]
    fn gamma_middle_line_of_phi_table() {
        assert_eq!(gamma(&w("963817245"), 6, 3), w("968317245"));
    }

    #[test]
    fn phi_worked_table() {
        // phi at k = 3, step by step through every gamma.
        let mut cur = w("693817245");
        let expect = [
            (1, "693817245"),
            (2, "693817245"),
            (3, "693817245"),
            (4, "963817245"),
            (5, "963817245"),
            (6, "968317245"),
            (7, "968137245"),
            (8, "986173245"),
            (9, "986173245"),
        ];
        for (j, want) in expect {
            cur = gamma(&cur, j, 3);
            assert_eq!(cur, w(want), "after gamma at j={j}");
        }
        assert_eq!(phi(&w("693817245"), 3), w("986173245"));
        assert_eq!(w("693817245").maj_k(2), 19);
        assert_eq!(w("986173245").maj_k(3), 19);
    }

    #[test]
    fn phi_fixes_short_words() {
        for s in ["1", "21", "312"] {
            assert_eq!(phi(&w(s), 3), w(s));
        }
    }

    #[test]
    fn phi_transfers_maj2_to_maj3_on_s5() {
        for v in all_permutations(5) {
            assert_eq!(v.maj_k(2), phi(&v, 3).maj_k(3), "word {v}");
        }
    }

    #[test]
    fn psi_inverts_phi_on_s4() {
        for v in all_permutations(4) {
            for k in 2..=5 {
                assert_eq!(psi(&phi(&v, k), k), v);
                assert_eq!(phi(&psi(&v, k), k), v);
            }
        }
    }

    #[test]
    fn psi_running_example() {
        assert_eq!(psi(&w("986173245"), 3), w("693817245"));
    }

    #[test]
    fn psi_fixes_short_words() {
        assert_eq!(psi(&w("21"), 3), w("21"));
    }

    #[test]
    fn phi_range_single_factor() {
        let v = w("693817245");
        for k in 2..=4 {
            assert_eq!(phi_range(&v, k, k - 1).unwrap(), phi(&v, k));
        }
    }

    #[test]
    fn phi_range_fixes_identity_word() {
        assert_eq!(phi_range(&w("123456"), 6, 1).unwrap(), w("123456"));
    }

    #[test]
    fn phi_range_rejects_bad_range() {
        let v = w("123");
        assert!(phi_range(&v, 2, 2).is_err());
        assert!(phi_range(&v, 2, 3).is_err());
        assert!(phi_range(&v, 3, 0).is_err());
        assert!(psi_range(&v, 1, 1).is_err());
    }

    #[test]
    fn phi_range_takes_maj_to_inv_on_s5() {
        for v in all_permutations(5) {
            let image = phi_range(&v, 5, 1).unwrap();
            assert_eq!(v.maj(), image.inv(), "word {v}");
            assert_eq!(psi_range(&image, 5, 1).unwrap(), v);
        }
    }

    #[test]
    fn foata_fixes_single_letters() {
        assert_eq!(foata(&w("7")).unwrap(), w("7"));
        assert_eq!(foata(&Word::default()).unwrap(), Word::default());
    }

    #[test]
    fn foata_takes_maj_to_inv_on_s5() {
        for v in all_permutations(5) {
            assert_eq!(v.maj(), foata(&v).unwrap().inv(), "word {v}");
        }
    }

    #[test]
    fn foata_handles_repeated_letters() {
        let m = Multiset::from_values(&[1, 1, 2, 2, 3]).unwrap();
        for v in words_on(&m, &BTreeSet::new()).unwrap() {
            assert_eq!(v.maj(), foata(&v).unwrap().inv(), "word {v}");
        }
    }

    #[test]
    fn foata_rejects_spacers() {
        assert!(foata(&w("1_2")).is_err());
    }

    #[test]
    fn composed_transfer_first_diverges_from_foata_at_length_six() {
        // The two maj-to-inv transfers coincide on every permutation of
        // length at most 5 and first separate at length 6 (16 of the 720
        // permutations), e.g. at 1 6 3 2 5 4.
        for n in 2..=5 {
            for v in all_permutations(n) {
                assert_eq!(foata(&v).unwrap(), phi_range(&v, n, 1).unwrap(), "word {v}");
            }
        }
        let divergent: Vec<Word> = all_permutations(6)
            .into_iter()
            .filter(|v| foata(v).unwrap() != phi_range(v, 6, 1).unwrap())
            .collect();
        assert_eq!(divergent.len(), 16);
        let v = w("163254");
        assert!(divergent.contains(&v));
        assert_eq!(phi_range(&v, 6, 1).unwrap(), w("651324"));
        assert_eq!(foata(&v).unwrap(), w("635124"));
        assert_eq!(v.maj(), 10);
        assert_eq!(w("651324").inv(), 10);
        assert_eq!(w("635124").inv(), 10);
    }

    #[test]
    fn phi_fixes_spacer_positions_and_multiset() {
        let m = Multiset::from_values(&[1, 2, 3, 4]).unwrap();
        let spacers: BTreeSet<usize> = [2, 5].into_iter().collect();
        for v in words_on(&m, &spacers).unwrap() {
            for k in 2..=4 {
                let img = phi(&v, k);
                assert_eq!(img.spacer_positions(), spacers);
                assert_eq!(img.multiset(), v.multiset());
            }
        }
    }

    #[test]
    fn recursive_formulation_matches_direct_phi() {
        // phi(wx) equals gamma at n+1 applied to phi(w), with x appended.
        for v in all_permutations(5) {
            for k in 2..=4 {
                let n = v.len();
                let prefix = Word::new(v.letters()[..n - 1].to_vec()).unwrap();
                let mut extended = phi(&prefix, k).letters().to_vec();
                extended.push(v.letter(n));
                let recursive = gamma(&Word::new(extended).unwrap(), n, k);
                assert_eq!(recursive, phi(&v, k), "word {v}, k {k}");
            }
        }
    }
}
