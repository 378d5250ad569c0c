//! Words over positive integers with optional spacer slots, and their
//! descent, inversion and major-index statistics.
//!
//! Positions are 1-based everywhere in the public interface. A spacer
//! occupies a position but is incomparable to every letter: any order
//! comparison touching a spacer is false, so spacers never contribute
//! descents or inversions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A single slot of a word: a positive integer or a spacer.
///
/// The derived `Ord` (spacer first, then integer order) is for use in
/// ordered containers only; the statistic-level comparison is [`Letter::gt`],
/// which is false whenever a spacer is involved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Spacer,
    Int(u32),
}

impl Letter {
    pub fn is_spacer(self) -> bool {
        matches!(self, Letter::Spacer)
    }

    pub fn value(self) -> Option<u32> {
        match self {
            Letter::Int(v) => Some(v),
            Letter::Spacer => None,
        }
    }

    /// Strict comparison `self > other`; false if either side is a spacer.
    pub fn gt(self, other: Letter) -> bool {
        match (self, other) {
            (Letter::Int(a), Letter::Int(b)) => a > b,
            _ => false,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Spacer => write!(f, "_"),
            Letter::Int(v) => write!(f, "{v}"),
        }
    }
}

/// Whether `x` splits the pair `a, b`: exactly one of `a`, `b` is `<= x`,
/// i.e. `a <= x < b` or `b <= x < a`. Always false when any argument is a
/// spacer, and always false for an equal pair.
pub fn splits(x: Letter, a: Letter, b: Letter) -> bool {
    match (x, a, b) {
        (Letter::Int(x), Letter::Int(a), Letter::Int(b)) => (a <= x && x < b) || (b <= x && x < a),
        _ => false,
    }
}

/// A set of position pairs `(i, j)` with `i < j`, both 1-based.
///
/// Houses k-descent sets and k-inversion sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexPairSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl IndexPairSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from pairs, rejecting any with `i >= j` or `i == 0`.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in pairs {
            if i == 0 || i >= j {
                return Err(Error::InvalidArgument(format!(
                    "index pair ({i},{j}) must satisfy 1 <= i < j"
                )));
            }
            set.insert((i, j));
        }
        Ok(IndexPairSet { pairs: set })
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        debug_assert!(i >= 1 && i < j);
        self.pairs.insert((i, j));
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// Sum of the first coordinates, the descent contribution to `maj_k`.
    pub fn first_index_sum(&self) -> usize {
        self.pairs.iter().map(|&(i, _)| i).sum()
    }

    pub fn union(&self, other: &IndexPairSet) -> IndexPairSet {
        IndexPairSet {
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }
}

impl fmt::Display for IndexPairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, (i, j)) in self.pairs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<(usize, usize)> for IndexPairSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        IndexPairSet {
            pairs: iter.into_iter().collect(),
        }
    }
}

/// A multiset of positive integers, stored as value -> multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    counts: BTreeMap<u32, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (u32, usize)>>(pairs: I) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (v, c) in pairs {
            if v == 0 {
                return Err(Error::InvalidArgument(
                    "multiset values must be positive".into(),
                ));
            }
            if c == 0 {
                return Err(Error::InvalidArgument(format!(
                    "multiplicity of {v} must be at least 1"
                )));
            }
            *counts.entry(v).or_insert(0) += c;
        }
        Ok(Multiset { counts })
    }

    pub fn from_values(values: &[u32]) -> Result<Self> {
        Self::from_counts(values.iter().map(|&v| (v, 1)))
    }

    /// Total number of elements, counted with multiplicity.
    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn counts(&self) -> &BTreeMap<u32, usize> {
        &self.counts
    }

    /// The elements in weakly increasing order, with repeats.
    pub fn to_sorted_vec(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for (&v, &c) in &self.counts {
            out.extend(std::iter::repeat_n(v, c));
        }
        out
    }
}

impl FromStr for Multiset {
    type Err = Error;

    /// Parses `value:multiplicity` entries separated by commas, e.g. `1:2,2:1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (v, c) = match tok.split_once(':') {
                Some((v, c)) => (v.trim(), c.trim()),
                None => (tok, "1"),
            };
            let v: u32 = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiset value {v:?}")))?;
            let c: usize = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {c:?}")))?;
            pairs.push((v, c));
        }
        Multiset::from_counts(pairs)
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (v, c)) in self.counts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}:{c}")?;
        }
        Ok(())
    }
}

/// A word: a sequence of letters, some of which may be spacers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.iter().any(|l| matches!(l, Letter::Int(0))) {
            return Err(Error::Parse("letters must be positive integers".into()));
        }
        Ok(Word { letters })
    }

    pub fn from_ints(values: &[u32]) -> Result<Self> {
        Word::new(values.iter().map(|&v| Letter::Int(v)).collect())
    }

    /// Shorthand constructor for words of single-digit letters: each char is
    /// a digit `1`-`9` or `_` for a spacer, e.g. `"9_8615"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '_' => letters.push(Letter::Spacer),
                '1'..='9' => letters.push(Letter::Int(ch as u32 - '0' as u32)),
                _ => return Err(Error::Parse(format!("bad digit {ch:?} in word"))),
            }
        }
        Ok(Word { letters })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    pub fn has_spacers(&self) -> bool {
        self.letters.iter().any(|l| l.is_spacer())
    }

    /// 1-based positions of the spacer slots.
    pub fn spacer_positions(&self) -> BTreeSet<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_spacer())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The multiset of non-spacer letters.
    pub fn multiset(&self) -> Multiset {
        let mut counts = BTreeMap::new();
        for l in &self.letters {
            if let Letter::Int(v) = l {
                *counts.entry(*v).or_insert(0) += 1;
            }
        }
        Multiset { counts }
    }

    /// Whether the non-spacer letters are exactly `1..=m` for some `m`,
    /// each occurring once.
    pub fn is_permutation(&self) -> bool {
        self.permutation_positions().is_ok()
    }

    /// For a permutation (possibly with spacers): `positions[v-1]` is the
    /// 1-based position of the letter `v`.
    pub(crate) fn permutation_positions(&self) -> Result<Vec<usize>> {
        let m = self.letters.iter().filter(|l| !l.is_spacer()).count();
        let mut pos = vec![0usize; m];
        for (idx, l) in self.letters.iter().enumerate() {
            if let Letter::Int(v) = *l {
                let v = v as usize;
                if v > m || pos[v - 1] != 0 {
                    return Err(Error::NotAPermutation(format!(
                        "letters of {self} are not a permutation of 1..={m}"
                    )));
                }
                pos[v - 1] = idx + 1;
            }
        }
        Ok(pos)
    }

    /// The k-descent set `{(i, i+k) : w_i > w_{i+k}}`.
    pub fn descent_set_k(&self, k: usize) -> IndexPairSet {
        assert!(k >= 1, "k must be a positive integer");
        let n = self.len();
        let mut set = IndexPairSet::new();
        for i in 1..=n.saturating_sub(k) {
            if self.letter(i).gt(self.letter(i + k)) {
                set.insert(i, i + k);
            }
        }
        set
    }

    /// The k-inversion set `{(i, j) : 0 < j - i < k, w_i > w_j}`.
    pub fn inversion_set_k(&self, k: usize) -> IndexPairSet {
        assert!(k >= 1, "k must be a positive integer");
        let n = self.len();
        let mut set = IndexPairSet::new();
        for i in 1..=n {
            for j in (i + 1)..=(i + k - 1).min(n) {
                if self.letter(i).gt(self.letter(j)) {
                    set.insert(i, j);
                }
            }
        }
        set
    }

    /// The k-major index: `|Inv_k| + sum of i over (i, i+k) in Des_k`.
    ///
    /// `maj_k` at `k = 1` is the major index; for `k >= len` it is the
    /// inversion number.
    pub fn maj_k(&self, k: usize) -> usize {
        self.inversion_set_k(k).len() + self.descent_set_k(k).first_index_sum()
    }

    /// Classical inversion number, computed directly from all pairs.
    pub fn inv(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.letter(i).gt(self.letter(j)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Classical major index, computed directly from the descents.
    pub fn maj(&self) -> usize {
        (1..self.len())
            .filter(|&i| self.letter(i).gt(self.letter(i + 1)))
            .sum()
    }

    /// The descent set of the inverse permutation: the values `i` whose
    /// position lies to the right of the position of `i + 1`.
    ///
    /// Requires the non-spacer letters to form a permutation.
    pub fn ides(&self) -> Result<BTreeSet<u32>> {
        let pos = self.permutation_positions()?;
        Ok((1..pos.len())
            .filter(|&i| pos[i - 1] > pos[i])
            .map(|i| i as u32)
            .collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses comma- or space-separated tokens; `_` denotes a spacer.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            if tok == "_" {
                letters.push(Letter::Spacer);
            } else {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
                if v == 0 {
                    return Err(Error::Parse("letters must be positive integers".into()));
                }
                letters.push(Letter::Int(v));
            }
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All words on the multiset `m` whose spacers sit exactly at the 1-based
/// positions in `spacers`, in lexicographic order of the letter sequences.
pub fn words_on(m: &Multiset, spacers: &BTreeSet<usize>) -> Result<Vec<Word>> {
    let total = m.size() + spacers.len();
    for &p in spacers {
        if p == 0 || p > total {
            return Err(Error::Infeasible(format!(
                "spacer position {p} outside 1..={total}"
            )));
        }
    }
    let mut arrangement = m.to_sorted_vec();
    let slots: Vec<usize> = (1..=total).filter(|p| !spacers.contains(p)).collect();
    let mut out = Vec::new();
    loop {
        let mut letters = vec![Letter::Spacer; total];
        for (slot, &v) in slots.iter().zip(arrangement.iter()) {
            letters[slot - 1] = Letter::Int(v);
        }
        out.push(Word::from_vec_unchecked(letters));
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    Ok(out)
}

/// All permutations of `1..=n` as spacer-free words, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Word> {
    let m = Multiset::from_counts((1..=n as u32).map(|v| (v, 1))).expect("valid multiset");
    words_on(&m, &BTreeSet::new()).expect("no spacers")
}

/// All multiplicity vectors of multisets of total size `n` on the letters
/// `1..=len`, i.e. the compositions of `n`, as multisets.
pub fn multisets_of_size(n: usize) -> Vec<Multiset> {
    fn rec(remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Multiset>) {
        if remaining == 0 {
            let m =
                Multiset::from_counts(cur.iter().enumerate().map(|(i, &c)| ((i + 1) as u32, c)))
                    .expect("valid multiset");
            out.push(m);
            return;
        }
        for first in 1..=remaining {
            cur.push(first);
            rec(remaining - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Multiset::new());
    } else {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn pairs(v: &[(usize, usize)]) -> IndexPairSet {
        IndexPairSet::from_pairs(v.iter().copied()).unwrap()
    }

    #[test]
    fn descent_set_3_running_example() {
        assert_eq!(
            w("986173245").descent_set_k(3),
            pairs(&[(1, 4), (2, 5), (3, 6), (5, 8)])
        );
    }

    #[test]
    fn descent_set_of_increasing_word_is_empty() {
        assert!(w("123456789").descent_set_k(1).is_empty());
    }

    #[test]
    fn spacer_blocks_descents() {
        // 9 _ 8: (1,2) and (2,3) touch the spacer, (1,3) is not a 1-pair.
        assert!(w("9_8").descent_set_k(1).is_empty());
        assert_eq!(w("9_8").descent_set_k(2), pairs(&[(1, 3)]));
    }

    #[test]
    fn inversion_set_3_running_example() {
        assert_eq!(
            w("986173245").inversion_set_k(3),
            pairs(&[
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 6),
                (5, 7),
                (6, 7)
            ])
        );
    }

    #[test]
    fn inversion_set_1_is_empty() {
        assert!(w("986173245").inversion_set_k(1).is_empty());
        assert!(w("321").inversion_set_k(1).is_empty());
    }

    #[test]
    fn inversion_set_beyond_length_gives_all_inverted_pairs() {
        assert_eq!(
            w("321").inversion_set_k(99),
            pairs(&[(1, 2), (1, 3), (2, 3)])
        );
    }

    #[test]
    fn maj_3_running_example_is_19() {
        assert_eq!(w("986173245").maj_k(3), 19);
    }

    #[test]
    fn maj_2_of_phi_preimage_is_19() {
        assert_eq!(w("693817245").maj_k(2), 19);
    }

    #[test]
    fn maj_k_of_increasing_word_is_zero() {
        for k in 1..=7 {
            assert_eq!(w("123456").maj_k(k), 0);
        }
    }

    #[test]
    fn classical_stats_agree_with_maj_k_extremes() {
        let v = w("986173245");
        assert_eq!(w("321").inv(), 3);
        assert_eq!(v.maj(), v.maj_k(1));
        assert_eq!(v.inv(), v.maj_k(9));
        assert_eq!(v.inv(), v.maj_k(42));
    }

    #[test]
    fn ides_running_example() {
        let set: BTreeSet<u32> = [2, 5, 7, 8].into_iter().collect();
        assert_eq!(w("986173245").ides().unwrap(), set);
    }

    #[test]
    fn ides_of_monotone_words() {
        // In the increasing word every i sits left of i+1, so no value is an
        // inverse descent; in the decreasing word every value is.
        assert!(w("12345").ides().unwrap().is_empty());
        let all: BTreeSet<u32> = (1..5).collect();
        assert_eq!(w("54321").ides().unwrap(), all);
    }

    #[test]
    fn ides_rejects_repeats() {
        assert!(w("121").ides().is_err());
        assert!(w("13").ides().is_err()); // gap: not a permutation of 1..=2
    }

    #[test]
    fn ides_allows_spacers() {
        let set: BTreeSet<u32> = [1].into_iter().collect();
        assert_eq!(w("2_1_3").ides().unwrap(), set);
    }

    #[test]
    fn splits_examples() {
        use Letter::{Int, Spacer};
        assert!(splits(Int(4), Int(7), Int(3))); // 3 <= 4 < 7
        assert!(!splits(Int(3), Int(8), Int(6)));
        assert!(!splits(Int(5), Int(2), Int(2))); // equal pair is never split
        assert!(!splits(Spacer, Int(1), Int(2)));
        assert!(!splits(Int(1), Spacer, Int(2)));
        assert!(!splits(Int(1), Int(2), Spacer));
    }

    #[test]
    fn word_parse_and_display_round_trip() {
        let v: Word = "9 8 _ 6 1".parse().unwrap();
        assert_eq!(v.to_string(), "9 8 _ 6 1");
        let u: Word = "9,8,_,6,1".parse().unwrap();
        assert_eq!(u, v);
        assert_eq!(v.spacer_positions(), [3].into_iter().collect());
        assert!("0 1".parse::<Word>().is_err());
        assert!("1 x".parse::<Word>().is_err());
    }

    #[test]
    fn words_on_multiset_with_spacers() {
        let m = Multiset::from_values(&[1, 1, 2]).unwrap();
        let spacers: BTreeSet<usize> = [2].into_iter().collect();
        let ws = words_on(&m, &spacers).unwrap();
        assert_eq!(ws.len(), 3);
        assert_eq!(ws[0].to_string(), "1 _ 1 2");
        assert_eq!(ws[1].to_string(), "1 _ 2 1");
        assert_eq!(ws[2].to_string(), "2 _ 1 1");
        assert!(words_on(&m, &[9].into_iter().collect()).is_err());
    }

    #[test]
    fn all_permutations_count_and_order() {
        let ps = all_permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0].to_string(), "1 2 3");
        assert_eq!(ps[5].to_string(), "3 2 1");
    }

    #[test]
    fn multisets_of_size_matches_composition_count() {
        assert_eq!(multisets_of_size(0).len(), 1);
        assert_eq!(multisets_of_size(3).len(), 4);
        assert_eq!(multisets_of_size(5).len(), 16);
        for m in multisets_of_size(4) {
            assert_eq!(m.size(), 4);
        }
    }

    #[test]
    fn multiset_parse() {
        let m: Multiset = "1:2,2:1".parse().unwrap();
        assert_eq!(m.to_sorted_vec(), vec![1, 1, 2]);
        assert_eq!(m.to_string(), "1:2,2:1");
        assert!("0:1".parse::<Multiset>().is_err());
        assert!("1:0".parse::<Multiset>().is_err());
    }
}
