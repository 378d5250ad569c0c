//! Elementary pattern involutions on permutations, the distance-switched
//! combination of them, and the equivalence classes they generate.
//!
//! For `2 <= i <= m-1`, the involutions act on permutations in which the
//! letter `i` does not sit positionally between `i-1` and `i+1`: the plain
//! involution swaps the letters at the two extreme positions of the triple
//! `{i-1, i, i+1}`, while the twiddled one cycles `i` to the opposite
//! extreme. Words where `i` does sit in the middle are fixed points. The
//! distance-switched involution picks between the two by comparing the
//! spread of the triple's positions (spacer slots included) with `k`.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bijections::{phi, phi_range};
use crate::tableau::{descent_positions, enumerate_syt, Partition};
use crate::word::{all_permutations, words_on, IndexPairSet, Multiset, Word};
use crate::{Error, Result};

/// Positions of `i-1`, `i`, `i+1` in `w`, validating the argument range.
fn triple_positions(w: &Word, i: u32) -> Result<(usize, usize, usize)> {
    let pos = w.permutation_positions()?;
    let m = pos.len() as u32;
    if i < 2 || i + 1 > m {
        return Err(Error::InvalidArgument(format!(
            "involution index must satisfy 2 <= i <= {}, got {i}",
            m.saturating_sub(1)
        )));
    }
    Ok((pos[i as usize - 2], pos[i as usize - 1], pos[i as usize]))
}

/// The elementary involution at `i`. With `twiddle = false` the letters at
/// the two extreme positions of the triple swap; with `twiddle = true` the
/// letter `i` moves to the opposite extreme and the other two letters shift
/// over. Identity when `i` lies positionally between `i-1` and `i+1`; all
/// other letters and all spacers stay put.
pub fn d_involution(w: &Word, i: u32, twiddle: bool) -> Result<Word> {
    let (p_prev, p_i, p_next) = triple_positions(w, i)?;
    if (p_prev < p_i && p_i < p_next) || (p_next < p_i && p_i < p_prev) {
        return Ok(w.clone());
    }
    let mut slots = [p_prev, p_i, p_next];
    slots.sort_unstable();
    let [q1, q2, q3] = slots;
    let mut letters = w.letters().to_vec();
    if !twiddle {
        letters.swap(q1 - 1, q3 - 1);
    } else if p_i == q1 {
        // i at the left extreme: cycle the triple one step left.
        let first = letters[q1 - 1];
        letters[q1 - 1] = letters[q2 - 1];
        letters[q2 - 1] = letters[q3 - 1];
        letters[q3 - 1] = first;
    } else {
        // i at the right extreme: cycle the triple one step right.
        let last = letters[q3 - 1];
        letters[q3 - 1] = letters[q2 - 1];
        letters[q2 - 1] = letters[q1 - 1];
        letters[q1 - 1] = last;
    }
    Ok(Word::from_vec_unchecked(letters))
}

/// The spread of the triple: the maximum distance between the positions of
/// `i-1`, `i`, `i+1`, counting spacer slots.
pub fn dist3(w: &Word, i: u32) -> Result<usize> {
    let (a, b, c) = triple_positions(w, i)?;
    Ok(a.max(b).max(c) - a.min(b).min(c))
}

/// The distance-switched involution: the plain involution when the triple
/// spreads wider than `k`, the twiddled one otherwise. Preserves the
/// k-descent set and the k-inversion count.
pub fn d_k(w: &Word, i: u32, k: usize) -> Result<Word> {
    assert!(k >= 1, "k must be a positive integer");
    let twiddle = dist3(w, i)? <= k;
    d_involution(w, i, twiddle)
}

/// An orbit of the distance-switched involutions at level `k`, together
/// with the statistics shared by all its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    pub k: usize,
    /// Members in lexicographic order.
    pub members: Vec<Word>,
    pub shared_des_k: IndexPairSet,
    pub shared_inv_count: usize,
}

impl Serialize for EquivClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EquivClass", 3)?;
        s.serialize_field(
            "members",
            &self.members.iter().map(Word::to_string).collect::<Vec<_>>(),
        )?;
        s.serialize_field("des_k", &self.shared_des_k.iter().collect::<Vec<_>>())?;
        s.serialize_field("inv_k", &self.shared_inv_count)?;
        s.end()
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Partition the permutations of `1..=n` (optionally with fixed spacer
/// positions) into orbits of the distance-switched involutions at level
/// `k`. Classes are ordered by their lexicographically smallest member.
pub fn k_classes(
    n: usize,
    k: usize,
    spacer_mask: Option<&BTreeSet<usize>>,
) -> Result<Vec<EquivClass>> {
    assert!(n >= 1, "n must be a positive integer");
    assert!(k >= 1, "k must be a positive integer");
    let empty = BTreeSet::new();
    let mask = spacer_mask.unwrap_or(&empty);
    let m = Multiset::from_counts((1..=n as u32).map(|v| (v, 1)))?;
    let words = words_on(&m, mask)?;
    let index: BTreeMap<&Word, usize> = words.iter().zip(0..).collect();
    let mut uf = UnionFind::new(words.len());
    for (idx, w) in words.iter().enumerate() {
        for i in 2..n as u32 {
            let image = d_k(w, i, k)?;
            uf.union(idx, index[&image]);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for idx in 0..words.len() {
        let root = uf.find(idx);
        groups.entry(root).or_default().push(idx);
    }
    let mut by_min: Vec<Vec<usize>> = groups.into_values().collect();
    by_min.sort_by_key(|g| g[0]);
    let mut classes = Vec::with_capacity(by_min.len());
    for group in by_min {
        let members: Vec<Word> = group.iter().map(|&idx| words[idx].clone()).collect();
        let shared_des_k = members[0].descent_set_k(k);
        let shared_inv_count = members[0].inversion_set_k(k).len();
        debug_assert!(members.iter().all(|w| w.descent_set_k(k) == shared_des_k
            && w.inversion_set_k(k).len() == shared_inv_count));
        classes.push(EquivClass {
            k,
            members,
            shared_des_k,
            shared_inv_count,
        });
    }
    Ok(classes)
}

/// Outcome of one exhaustive structural check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub checked: u64,
    /// Rendered counterexamples, capped at a small fixed number.
    pub violations: Vec<String>,
    pub violation_count: u64,
}

const VIOLATION_CAP: usize = 25;

struct Check {
    name: &'static str,
    n: usize,
    checked: u64,
    violations: Vec<String>,
    violation_count: u64,
}

impl Check {
    fn new(name: &'static str, n: usize) -> Self {
        Check {
            name,
            n,
            checked: 0,
            violations: Vec::new(),
            violation_count: 0,
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(detail());
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            n: self.n,
            pass: self.violation_count == 0,
            checked: self.checked,
            violations: self.violations,
            violation_count: self.violation_count,
        }
    }
}

/// Check that the level-2 transfer bijection intertwines the level-1 and
/// level-2 involutions: applying the plain involution then the bijection
/// equals applying the bijection then the distance-switched involution, for
/// every permutation of `1..=n` and every applicable `i`.
pub fn check_phi2_commutation(n: usize) -> CheckReport {
    assert!(n >= 3, "commutation check needs n >= 3");
    let mut check = Check::new("phi2-commutation", n);
    for w in all_permutations(n) {
        for i in 2..n as u32 {
            if dist_between(&w, i) {
                continue;
            }
            let lhs = phi(&d_k(&w, i, 1).expect("valid involution"), 2);
            let rhs = d_k(&phi(&w, 2), i, 2).expect("valid involution");
            check.case(lhs == rhs, || {
                format!("w={w}, i={i}: phi2(d_i(w))={lhs} but D2_i(phi2(w))={rhs}")
            });
        }
    }
    check.finish()
}

/// Whether `i` lies positionally between `i-1` and `i+1` in `w`.
fn dist_between(w: &Word, i: u32) -> bool {
    let (p_prev, p_i, p_next) = triple_positions(w, i).expect("valid triple");
    (p_prev < p_i && p_i < p_next) || (p_next < p_i && p_i < p_prev)
}

/// Check the two structural facts about the top-level classes of `1..=n`:
/// membership is characterized by the pair (inversion number, sign of
/// `w_1 > w_n`), and the full transfer bijection sends plain-involution
/// neighbors to the same class.
pub fn check_n_class_characterization(n: usize) -> CheckReport {
    assert!(n >= 2, "n-class check needs n >= 2");
    let mut check = Check::new("n-class-characterization", n);
    let words = all_permutations(n);
    let index: BTreeMap<&Word, usize> = words.iter().zip(0..).collect();
    let classes = k_classes(n, n, None).expect("valid class computation");
    let mut class_of = vec![usize::MAX; words.len()];
    for (id, class) in classes.iter().enumerate() {
        for w in &class.members {
            class_of[index[w]] = id;
        }
    }
    // signature <-> class id must be one-to-one in both directions
    let mut sig_to_class: BTreeMap<(usize, bool), usize> = BTreeMap::new();
    let mut class_sigs: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
    for (idx, w) in words.iter().enumerate() {
        let sig = (w.inv(), w.letter(1).gt(w.letter(n)));
        let id = class_of[idx];
        match sig_to_class.get(&sig) {
            None => {
                sig_to_class.insert(sig, id);
                check.case(true, String::new);
            }
            Some(&seen) => check.case(seen == id, || {
                format!(
                    "w={w}: signature (inv={}, first>last={}) occurs in two distinct classes",
                    sig.0, sig.1
                )
            }),
        }
        match class_sigs.get(&id) {
            None => {
                class_sigs.insert(id, sig);
                check.case(true, String::new);
            }
            Some(&seen) => check.case(seen == sig, || {
                format!("w={w}: one class carries two distinct signatures")
            }),
        }
    }
    // the full transfer respects plain-involution neighborhoods
    let image_class: Vec<usize> = words
        .iter()
        .map(|w| class_of[index[&phi_range(w, n, 1).expect("n >= 2")]])
        .collect();
    for (idx, w) in words.iter().enumerate() {
        for i in 2..n as u32 {
            if dist_between(w, i) {
                continue;
            }
            let neighbor = d_involution(w, i, false).expect("applicable");
            check.case(image_class[idx] == image_class[index[&neighbor]], || {
                format!(
                    "w={w}, i={i}: the transfer images of w and its involution neighbor fall \
                     in different top-level classes"
                )
            });
        }
    }
    check.finish()
}

/// For every level-1 class of `1..=n`, find a partition whose standard
/// tableaux realize the class's multiset of inverse descent sets. This is
/// the combinatorial shadow of the statement that each such class sums to a
/// single Schur function.
pub fn check_1class_schur_shape(n: usize) -> CheckReport {
    assert!(n >= 1);
    let mut check = Check::new("schur-shape", n);
    let mut tableau_multisets: Vec<(Partition, Vec<Vec<u32>>)> = Vec::new();
    for shape in Partition::partitions_of(n) {
        let mut multiset: Vec<Vec<u32>> = enumerate_syt(&shape)
            .iter()
            .map(|t| descent_positions(t).into_iter().collect())
            .collect();
        multiset.sort();
        tableau_multisets.push((shape, multiset));
    }
    for class in k_classes(n, 1, None).expect("valid class computation") {
        let mut ides_multiset: Vec<Vec<u32>> = class
            .members
            .iter()
            .map(|w| {
                w.ides()
                    .expect("class members are permutations")
                    .into_iter()
                    .collect()
            })
            .collect();
        ides_multiset.sort();
        let matched = tableau_multisets
            .iter()
            .find(|(_, m)| *m == ides_multiset)
            .map(|(shape, _)| shape.clone());
        check.case(matched.is_some(), || {
            let members: Vec<String> = class.members.iter().map(Word::to_string).collect();
            format!(
                "class {{{}}} has inverse-descent multiset {ides_multiset:?} matching no shape",
                members.join(", ")
            )
        });
    }
    check.finish()
}

/// Which of the three candidate-bijection requirements hold, with
/// counterexamples for the ones that fail.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaReport {
    pub k: usize,
    pub n: usize,
    /// (a) bijectivity with fixed last letter, end-comparison transfer and
    /// inverse-descent preservation.
    pub bijection_props: CheckReport,
    /// (b) `maj_{k-1}(w) = maj_k(candidate(w))` for every `w`.
    pub statistic_transfer: CheckReport,
    /// (c) level-(k-1) equivalence implies level-k equivalence of images.
    pub class_compatible: CheckReport,
}

impl ThetaReport {
    pub fn all_pass(&self) -> bool {
        self.bijection_props.pass && self.statistic_transfer.pass && self.class_compatible.pass
    }
}

/// Tabulate a word map on all permutations of `1..=n`, for feeding to
/// [`check_theta_properties`].
pub fn tabulate_on_sn(n: usize, f: impl Fn(&Word) -> Word) -> BTreeMap<Word, Word> {
    all_permutations(n)
        .into_iter()
        .map(|w| {
            let image = f(&w);
            (w, image)
        })
        .collect()
}

/// Test a candidate bijection family member at level `k` against the three
/// requirements a maj-transfer family compatible with the equivalence
/// classes must satisfy. The candidate must be given as a total map on the
/// permutations of `1..=n`.
pub fn check_theta_properties(
    candidate: &BTreeMap<Word, Word>,
    k: usize,
    n: usize,
) -> Result<ThetaReport> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "candidate check needs k >= 2 so that level k-1 exists".into(),
        ));
    }
    let words = all_permutations(n);
    for w in &words {
        if !candidate.contains_key(w) {
            return Err(Error::InvalidArgument(format!(
                "candidate map is not total: no image for {w}"
            )));
        }
    }

    // (a) bijectivity, fixed last letter, end-comparison transfer, ides.
    let mut props = Check::new("bijection-properties", n);
    let images: BTreeSet<&Word> = words.iter().map(|w| &candidate[w]).collect();
    props.case(images.len() == words.len(), || {
        "candidate is not injective on the permutations".to_string()
    });
    for w in &words {
        let image = &candidate[w];
        props.case(image.multiset() == w.multiset(), || {
            format!("w={w}: image {image} is not a rearrangement")
        });
        if n >= 1 {
            props.case(image.letter(n) == w.letter(n), || {
                format!("w={w}: image {image} moved the last letter")
            });
        }
        if n > k {
            let before = w.letter(n - k + 1).gt(w.letter(n));
            let after = image.letter(n - k).gt(image.letter(n));
            props.case(before == after, || {
                format!("w={w}: end comparison not transferred to {image}")
            });
        }
        props.case(
            w.ides().expect("permutation") == image.ides().expect("permutation"),
            || format!("w={w}: inverse descent set changed in {image}"),
        );
    }

    // (b) statistic transfer.
    let mut transfer = Check::new("statistic-transfer", n);
    for w in &words {
        let image = &candidate[w];
        transfer.case(w.maj_k(k - 1) == image.maj_k(k), || {
            format!(
                "w={w}: maj_{}={} but maj_{}({image})={}",
                k - 1,
                w.maj_k(k - 1),
                k,
                image.maj_k(k)
            )
        });
    }

    // (c) images of a level-(k-1) class land in one level-k class.
    let mut compatible = Check::new("class-compatibility", n);
    let lower = k_classes(n, k - 1, None)?;
    let upper = k_classes(n, k, None)?;
    let mut upper_of: BTreeMap<&Word, usize> = BTreeMap::new();
    for (id, class) in upper.iter().enumerate() {
        for w in &class.members {
            upper_of.insert(w, id);
        }
    }
    for class in &lower {
        let ids: Vec<usize> = class
            .members
            .iter()
            .map(|w| upper_of[&candidate[w]])
            .collect();
        compatible.case(ids.windows(2).all(|p| p[0] == p[1]), || {
            let pair = class
                .members
                .iter()
                .zip(&ids)
                .find(|(_, &id)| id != ids[0])
                .map(|(w, _)| w)
                .expect("mismatch exists");
            format!(
                "w={} and u={pair} are level-{} equivalent but their images {} and {} are not \
                 level-{k} equivalent",
                class.members[0],
                k - 1,
                candidate[&class.members[0]],
                candidate[pair],
            )
        });
    }

    Ok(ThetaReport {
        k,
        n,
        bijection_props: props.finish(),
        statistic_transfer: transfer.finish(),
        class_compatible: compatible.finish(),
    })
}
