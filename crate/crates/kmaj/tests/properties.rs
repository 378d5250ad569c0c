//! Randomized invariants via proptest.

use proptest::prelude::*;

use kmaj::bijections::{foata, gamma, gamma_index_set, phi, psi};
use kmaj::distribution::QPolynomial;
use kmaj::tableau::{enumerate_syt, Partition, StandardTableau};
use kmaj::word::{splits, Letter, Word};

fn letter_strategy() -> impl Strategy<Value = Letter> {
    prop_oneof![
        6 => (1u32..=9).prop_map(Letter::Int),
        1 => Just(Letter::Spacer),
    ]
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter_strategy(), 0..=max_len)
        .prop_map(|letters| Word::new(letters).expect("positive letters"))
}

/// A word whose non-spacer letters use arbitrary (multi-digit) values.
fn wide_word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(
        prop_oneof![5 => (1u32..=500).prop_map(Letter::Int), 1 => Just(Letter::Spacer)],
        0..=12,
    )
    .prop_map(|letters| Word::new(letters).expect("positive letters"))
}

fn tableau_strategy(max_n: usize) -> impl Strategy<Value = StandardTableau> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let shapes = Partition::partitions_of(n);
            (0..shapes.len()).prop_map(move |s| shapes[s].clone())
        })
        .prop_flat_map(|shape| {
            let tabs = enumerate_syt(&shape);
            (0..tabs.len()).prop_map(move |i| tabs[i].clone())
        })
}

proptest! {
    #[test]
    fn splits_is_symmetric_in_the_pair(x in letter_strategy(), a in letter_strategy(), b in letter_strategy()) {
        prop_assert_eq!(splits(x, a, b), splits(x, b, a));
        prop_assert!(!splits(x, a, a));
    }

    #[test]
    fn inversion_set_is_union_of_descent_sets(w in word_strategy(10), k in 1usize..=12) {
        let mut union = kmaj::IndexPairSet::new();
        for j in 1..k {
            union = union.union(&w.descent_set_k(j));
        }
        prop_assert_eq!(w.inversion_set_k(k), union);
    }

    #[test]
    fn spacer_positions_stay_out_of_the_statistics(w in word_strategy(10), k in 1usize..=10) {
        let spacers = w.spacer_positions();
        for (i, j) in w.descent_set_k(k).iter() {
            prop_assert!(!spacers.contains(&i) && !spacers.contains(&j));
        }
    }

    #[test]
    fn maj_k_extremes_match_the_classical_statistics(w in wide_word_strategy()) {
        prop_assert_eq!(w.maj_k(1), w.maj());
        prop_assert_eq!(w.maj_k(w.len().max(1)), w.inv());
    }

    #[test]
    fn gamma_is_involutive_with_a_structured_chain(w in word_strategy(10), j in 1usize..=10, k in 2usize..=8) {
        if j <= w.len() {
            let chain = gamma_index_set(&w, j, k);
            for &i in chain.indices() {
                prop_assert!(i >= 1 && i + k <= j);
                prop_assert_eq!((j - i) % k, 0);
            }
            for pair in chain.indices().windows(2) {
                prop_assert_eq!(pair[0] - pair[1], k);
            }
            prop_assert_eq!(gamma(&gamma(&w, j, k), j, k), w);
        }
    }

    #[test]
    fn phi_and_psi_invert_each_other(w in wide_word_strategy(), k in 2usize..=8) {
        prop_assert_eq!(psi(&phi(&w, k), k), w.clone());
        prop_assert_eq!(phi(&psi(&w, k), k), w);
    }

    #[test]
    fn phi_fixes_spacers_and_rearranges(w in word_strategy(10), k in 2usize..=8) {
        let image = phi(&w, k);
        prop_assert_eq!(image.spacer_positions(), w.spacer_positions());
        prop_assert_eq!(image.multiset(), w.multiset());
        if !w.is_empty() {
            prop_assert_eq!(image.letter(w.len()), w.letter(w.len()));
        }
    }

    #[test]
    fn phi_extends_recursively(w in word_strategy(9), k in 2usize..=6) {
        // phi of (w with its last letter re-appended) equals the swap at the
        // last position applied to (phi of the prefix, last letter appended)
        if !w.is_empty() {
            let n = w.len();
            let prefix = Word::new(w.letters()[..n - 1].to_vec()).expect("valid");
            let mut extended = phi(&prefix, k).letters().to_vec();
            extended.push(w.letter(n));
            let recursive = gamma(&Word::new(extended).expect("valid"), n, k);
            prop_assert_eq!(recursive, phi(&w, k));
        }
    }

    #[test]
    fn phi_transfers_the_statistic_without_spacers(w in wide_word_strategy(), k in 2usize..=8) {
        if !w.has_spacers() {
            prop_assert_eq!(w.maj_k(k - 1), phi(&w, k).maj_k(k));
        }
    }

    #[test]
    fn foata_carries_maj_to_inv(w in wide_word_strategy()) {
        if !w.has_spacers() {
            prop_assert_eq!(w.maj(), foata(&w).expect("spacer-free").inv());
        }
    }

    #[test]
    fn word_text_round_trips(w in wide_word_strategy()) {
        let text = w.to_string();
        let back: Word = text.parse().expect("own rendering parses");
        prop_assert_eq!(back, w);
    }

    #[test]
    fn tableau_text_and_json_round_trip(t in tableau_strategy(7)) {
        let back: StandardTableau = t.to_string().parse().expect("own rendering parses");
        prop_assert_eq!(&back, &t);
        let json = serde_json::to_string(&t).expect("serializable");
        let from_json: StandardTableau = serde_json::from_str(&json).expect("own json parses");
        prop_assert_eq!(from_json, t);
    }

    #[test]
    fn qpolynomial_arithmetic_and_serde(a in prop::collection::vec(0u64..50, 0..8),
                                        b in prop::collection::vec(0u64..50, 0..8)) {
        let p = QPolynomial::from_coeffs(a);
        let q = QPolynomial::from_coeffs(b);
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).coeff_sum(), p.coeff_sum() * q.coeff_sum());
        if !q.is_zero() {
            // exact division undoes multiplication
            prop_assert_eq!(p.mul(&q).try_div_exact(&q), Some(p.clone()));
        }
        let json = serde_json::to_string(&p).expect("serializable");
        let back: QPolynomial = serde_json::from_str(&json).expect("own json parses");
        prop_assert_eq!(back, p);
    }
}
