//! Named verification suites: exhaustive desk-scale checks of the library's
//! structural claims, with machine-readable reports.
//!
//! Every suite is deterministic and independent of the worker count; set
//! `KMAJ_THREADS` to cap the worker pool.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bijections::{foata, gamma, gamma_index_set, phi, phi_range, psi};
use crate::distribution::{q_hook_length, verify_mahonian, QPolynomial};
use crate::equivalence::{
    check_1class_schur_shape, check_n_class_characterization, check_phi2_commutation,
    check_theta_properties, d_involution, d_k, k_classes, tabulate_on_sn, CheckReport,
};
use crate::pool::{shard_map, thread_count};
use crate::tableau::{enumerate_syt, experimental, Partition, StandardTableau};
use crate::word::{all_permutations, multisets_of_size, IndexPairSet, Multiset, Word};
use crate::{Error, Result};

/// One failed case inside a suite, with the full input that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct CaseFailure {
    pub check: String,
    pub input: String,
    pub detail: String,
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    /// Number of individual cases examined.
    pub checked: u64,
    pub failure_count: u64,
    /// Failed cases, capped at a small fixed number.
    pub failures: Vec<CaseFailure>,
    /// Witnesses found by existence-style suites, plus informational notes.
    pub witnesses: Vec<String>,
}

const FAILURE_CAP: usize = 25;

#[derive(Default)]
struct Partial {
    checked: u64,
    failure_count: u64,
    failures: Vec<CaseFailure>,
    witnesses: Vec<String>,
}

impl Partial {
    fn case(
        &mut self,
        check: &str,
        input: &dyn Fn() -> String,
        ok: bool,
        detail: &dyn Fn() -> String,
    ) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(CaseFailure {
                    check: check.to_string(),
                    input: input(),
                    detail: detail(),
                });
            }
        }
    }

    fn absorb_check(&mut self, report: CheckReport) {
        self.checked += report.checked;
        self.failure_count += report.violation_count;
        for v in report.violations {
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(CaseFailure {
                    check: format!("{} (n={})", report.name, report.n),
                    input: format!("n={}", report.n),
                    detail: v,
                });
            }
        }
    }

    fn merge(parts: Vec<Partial>) -> Partial {
        let mut out = Partial::default();
        for p in parts {
            out.checked += p.checked;
            out.failure_count += p.failure_count;
            for f in p.failures {
                if out.failures.len() < FAILURE_CAP {
                    out.failures.push(f);
                }
            }
            out.witnesses.extend(p.witnesses);
        }
        out
    }

    fn finish(self, suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            pass: self.failure_count == 0,
            checked: self.checked,
            failure_count: self.failure_count,
            failures: self.failures,
            witnesses: self.witnesses,
        }
    }
}

fn pairs(v: &[(usize, usize)]) -> IndexPairSet {
    IndexPairSet::from_pairs(v.iter().copied()).expect("valid pairs")
}

/// Reproduce the pinned worked examples bit-exactly: the statistics of
/// `9 8 6 1 7 3 2 4 5`, the swap chain and swap at `(j, k) = (8, 3)`, the
/// full step table of the transfer bijection from `6 9 3 8 1 7 2 4 5`, the
/// inverse descent set, and the shape-(4,3,1) tableau examples with the
/// level-2 transfer chain.
pub fn worked_examples() -> SuiteReport {
    let mut p = Partial::default();
    let w = Word::from_digits("986173245").expect("valid word");
    let input = || "word 9 8 6 1 7 3 2 4 5, k=3".to_string();

    let des3 = w.descent_set_k(3);
    p.case(
        "descent set",
        &input,
        des3 == pairs(&[(1, 4), (2, 5), (3, 6), (5, 8)]),
        &|| format!("Des_3 = {des3}"),
    );
    let inv3 = w.inversion_set_k(3);
    p.case(
        "inversion set",
        &input,
        inv3 == pairs(&[
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 4),
            (5, 6),
            (5, 7),
            (6, 7),
        ]),
        &|| format!("Inv_3 = {inv3}"),
    );
    p.case("maj_3 = 19", &input, w.maj_k(3) == 19, &|| {
        format!("maj_3 = {}", w.maj_k(3))
    });

    let chain = gamma_index_set(&w, 8, 3);
    p.case(
        "swap chain at (8,3) is {5,2}",
        &input,
        chain.indices() == [5, 2],
        &|| format!("chain = {:?}", chain.indices()),
    );
    let swapped = gamma(&w, 8, 3);
    p.case(
        "swap at (8,3)",
        &input,
        swapped == Word::from_digits("968137245").expect("valid word"),
        &|| format!("gamma_8 image = {swapped}"),
    );

    let start = Word::from_digits("693817245").expect("valid word");
    let table_input = || "word 6 9 3 8 1 7 2 4 5, k=3".to_string();
    let steps = [
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
    let mut cur = start.clone();
    for (j, want) in steps {
        cur = gamma(&cur, j, 3);
        let want = Word::from_digits(want).expect("valid word");
        p.case("transfer step table", &table_input, cur == want, &|| {
            format!("after swap at j={j}: {cur} (expected {want})")
        });
    }
    p.case(
        "transfer endpoint",
        &table_input,
        phi(&start, 3) == w,
        &|| format!("phi(start, 3) = {}", phi(&start, 3)),
    );
    p.case(
        "maj_2 of start is 19",
        &table_input,
        start.maj_k(2) == 19,
        &|| format!("maj_2 = {}", start.maj_k(2)),
    );
    p.case(
        "statistic carried: maj_2 = maj_3 of image",
        &table_input,
        start.maj_k(2) == phi(&start, 3).maj_k(3),
        &|| "transfer failed".to_string(),
    );

    let ides = w.ides().expect("permutation");
    let want_ides: BTreeSet<u32> = [2, 5, 7, 8].into_iter().collect();
    p.case("inverse descent set", &input, ides == want_ides, &|| {
        format!("ides = {ides:?}")
    });

    let t: StandardTableau = "1 3 4 7 / 2 5 6 / 8".parse().expect("valid tableau");
    let t_input = || format!("tableau {t}");
    p.case(
        "tableau descents",
        &t_input,
        t.descent_set() == pairs(&[(1, 2), (4, 5), (7, 8)]),
        &|| format!("Des = {}", t.descent_set()),
    );
    p.case("tableau maj = 12", &t_input, t.maj() == 12, &|| {
        format!("maj = {}", t.maj())
    });
    p.case(
        "tableau maj_2 = 16",
        &t_input,
        t.maj_k(2).expect("k valid") == 16,
        &|| format!("maj_2 = {:?}", t.maj_k(2)),
    );

    let t0: StandardTableau = "1 3 5 7 / 2 4 6 / 8".parse().expect("valid tableau");
    let t0_input = || format!("tableau {t0}, k=2");
    let mid: StandardTableau = "1 2 5 7 / 3 4 6 / 8".parse().expect("valid tableau");
    let mut cur = t0.clone();
    for j in 1..=8u32 {
        let next = cur.gamma(j, 2).expect("k valid");
        let ok = match j {
            4 => next == mid,
            6 => next == t,
            _ => next == cur,
        };
        p.case("tableau transfer chain", &t0_input, ok, &|| {
            format!("after swap at j={j}: {next}")
        });
        cur = next;
    }
    p.case(
        "tableau transfer endpoint",
        &t0_input,
        t0.phi(2).expect("k valid") == t,
        &|| format!("phi(T, 2) = {}", t0.phi(2).expect("k valid")),
    );
    p.case(
        "tableau statistic carried: maj = 16 = maj_2 of image",
        &t0_input,
        t0.maj() == 16 && t0.phi(2).expect("k valid").maj_k(2).expect("k valid") == 16,
        &|| "transfer failed".to_string(),
    );

    p.finish("worked-examples")
}

fn subsets_of_size(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.iter().copied().collect());
        // advance the lexicographically next k-subset of 1..=n
        let mut i = k;
        while i > 0 && cur[i - 1] == n - (k - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    if k == 0 {
        out.truncate(1);
    }
    out
}

/// The Mahonian suite: over every multiset of size `<= max_size` and every
/// spacer mask bringing the total length to `<= max_size`, the `maj_k`
/// distributions agree for `k = 1..=max_size`, and the spacer-free maj
/// distribution equals the q-multinomial oracle.
pub fn mahonian(max_size: usize) -> SuiteReport {
    let mut tasks: Vec<(Multiset, BTreeSet<usize>)> = Vec::new();
    for s in 0..=max_size {
        for m in multisets_of_size(s) {
            for total in s..=max_size {
                for mask in subsets_of_size(total, total - s) {
                    tasks.push((m.clone(), mask));
                }
            }
        }
    }
    let parts = shard_map(tasks, thread_count(), |(m, mask)| {
        let mut p = Partial::default();
        let report = verify_mahonian(&m, &mask, max_size).expect("feasible word set");
        p.case(
            "maj_k distributions coincide",
            &|| {
                format!(
                    "multiset {{{m}}}, spacers {:?}",
                    mask.iter().collect::<Vec<_>>()
                )
            },
            report.pass,
            &|| report.mismatches.join("; "),
        );
        p
    });
    Partial::merge(parts).finish("mahonian")
}

/// The transfer-bijection property suite over permutations: for every
/// `w` in `S_n`, `n <= max_n`, and every step `k = 2..=max_n`, the maps
/// transfer the statistic, invert each other, fix the tail, carry the
/// end-of-word comparison, and preserve the inverse descent set.
pub fn phi_props(max_n: usize) -> SuiteReport {
    let mut tasks: Vec<(usize, usize)> = Vec::new();
    for n in 1..=max_n {
        for k in 2..=max_n.max(2) {
            tasks.push((n, k));
        }
    }
    let parts = shard_map(tasks, thread_count(), |(n, k)| {
        let mut p = Partial::default();
        for w in all_permutations(n) {
            let input = || format!("word {w}, k={k}");
            let image = phi(&w, k);
            p.case(
                "statistic transfer",
                &input,
                w.maj_k(k - 1) == image.maj_k(k),
                &|| {
                    format!(
                        "maj_{}(w)={} but maj_{}(image {image})={}",
                        k - 1,
                        w.maj_k(k - 1),
                        k,
                        image.maj_k(k)
                    )
                },
            );
            p.case("psi inverts phi", &input, psi(&image, k) == w, &|| {
                format!("psi(phi(w)) = {}", psi(&image, k))
            });
            p.case("phi inverts psi", &input, phi(&psi(&w, k), k) == w, &|| {
                format!("phi(psi(w)) = {}", phi(&psi(&w, k), k))
            });
            let tail_fixed =
                (0..(k - 1).min(n)).all(|back| image.letter(n - back) == w.letter(n - back));
            p.case("last k-1 letters fixed", &input, tail_fixed, &|| {
                format!("image {image}")
            });
            if n > k {
                let before = w.letter(n - k + 1).gt(w.letter(n));
                let after = image.letter(n - k).gt(image.letter(n));
                p.case(
                    "end comparison transferred",
                    &input,
                    before == after,
                    &|| format!("image {image}"),
                );
            }
            p.case(
                "inverse descent set preserved",
                &input,
                w.ides().expect("permutation") == image.ides().expect("permutation"),
                &|| format!("image {image}"),
            );
        }
        p
    });
    Partial::merge(parts).finish("phi-props")
}

/// The divergence suite: the composed transfer from maj down to inv agrees
/// with the classical second fundamental transformation on the statistic,
/// yet the two maps differ on some permutation of length `<= max_n`.
pub fn foata_divergence(max_n: usize) -> SuiteReport {
    let mut p = Partial::default();
    let mut witness: Option<Word> = None;
    for n in 2..=max_n {
        for w in all_permutations(n) {
            let input = || format!("word {w}");
            let classical = foata(&w).expect("spacer-free");
            let composed = phi_range(&w, n, 1).expect("n >= 2");
            p.case(
                "classical transfer: maj = inv of image",
                &input,
                w.maj() == classical.inv(),
                &|| format!("foata image {classical} has inv {}", classical.inv()),
            );
            p.case(
                "composed transfer: maj = inv of image",
                &input,
                w.maj() == composed.inv(),
                &|| format!("composed image {composed} has inv {}", composed.inv()),
            );
            if witness.is_none() && classical != composed {
                witness = Some(w.clone());
                p.witnesses.push(format!(
                    "the transfers differ at {w}: composed {composed}, classical {classical}"
                ));
            }
        }
    }
    let mut report = p.finish("foata-divergence");
    if report.witnesses.is_empty() {
        report.pass = false;
        report.failures.push(CaseFailure {
            check: "maps differ somewhere".to_string(),
            input: format!("all permutations of length <= {max_n}"),
            detail: "the composed transfer agreed with the classical one everywhere".to_string(),
        });
        report.failure_count += 1;
    }
    report
}

/// The tableau Mahonian suite: over every shape of size `<= max_n`, the
/// maj, maj_2 and maj_3 distributions coincide (and match the q-analogue of
/// the hook length formula), and the level-2 and level-3 tableau transfers
/// are inverse-pair bijections realizing the statistic transfer.
pub fn mahonian_syt(max_n: usize) -> SuiteReport {
    let mut tasks: Vec<Partition> = Vec::new();
    for n in 1..=max_n {
        tasks.extend(Partition::partitions_of(n));
    }
    let parts = shard_map(tasks, thread_count(), |shape| {
        let mut p = Partial::default();
        let input = || format!("shape {shape}");
        let tableaux = enumerate_syt(&shape);
        p.case(
            "enumeration matches hook count",
            &input,
            tableaux.len() as u64 == shape.syt_count(),
            &|| {
                format!(
                    "enumerated {}, hook formula {}",
                    tableaux.len(),
                    shape.syt_count()
                )
            },
        );
        let mut dists = [
            QPolynomial::zero(),
            QPolynomial::zero(),
            QPolynomial::zero(),
        ];
        for t in &tableaux {
            for k in 1..=3 {
                dists[k - 1].add_term(t.maj_k(k).expect("k valid"), 1);
            }
        }
        p.case(
            "maj and maj_2 equidistributed",
            &input,
            dists[0] == dists[1],
            &|| format!("maj: {}, maj_2: {}", dists[0], dists[1]),
        );
        p.case(
            "maj and maj_3 equidistributed",
            &input,
            dists[0] == dists[2],
            &|| format!("maj: {}, maj_3: {}", dists[0], dists[2]),
        );
        p.case(
            "maj distribution matches hook q-analogue",
            &input,
            dists[0] == q_hook_length(&shape),
            &|| format!("maj: {}, oracle: {}", dists[0], q_hook_length(&shape)),
        );
        for k in 2..=3usize {
            let mut images = BTreeSet::new();
            for t in &tableaux {
                let image = t.phi(k).expect("k valid");
                p.case(
                    "transfer carries the statistic",
                    &|| format!("shape {shape}, tableau {t}, k={k}"),
                    t.maj_k(k - 1).expect("k valid") == image.maj_k(k).expect("k valid"),
                    &|| {
                        format!(
                            "maj_{} = {:?}, image {image} has maj_{} = {:?}",
                            k - 1,
                            t.maj_k(k - 1),
                            k,
                            image.maj_k(k)
                        )
                    },
                );
                p.case(
                    "reverse composition inverts",
                    &|| format!("shape {shape}, tableau {t}, k={k}"),
                    image.psi(k).expect("k valid") == *t,
                    &|| format!("psi(phi(T)) = {}", image.psi(k).expect("k valid")),
                );
                images.insert(image);
            }
            p.case(
                "transfer is a bijection on the shape",
                &|| format!("shape {shape}, k={k}"),
                images.len() == tableaux.len(),
                &|| {
                    format!(
                        "image set has {} of {} tableaux",
                        images.len(),
                        tableaux.len()
                    )
                },
            );
        }
        p
    });
    Partial::merge(parts).finish("mahonian-syt")
}

/// The breakdown suite: the naive level-4 extension of the tableau
/// machinery fails the statistic transfer on shape (2,2,2); the suite must
/// exhibit a witness tableau.
pub fn k4_breakdown() -> SuiteReport {
    let mut p = Partial::default();
    let shape = Partition::new(vec![2, 2, 2]).expect("valid partition");
    let mut witness = None;
    for t in enumerate_syt(&shape) {
        // the k <= 3 transfers still hold on this shape
        for k in 2..=3usize {
            p.case(
                "transfer still holds below k=4",
                &|| format!("tableau {t}, k={k}"),
                t.maj_k(k - 1).expect("k valid")
                    == t.phi(k).expect("k valid").maj_k(k).expect("k valid"),
                &|| "transfer failed below the breakdown level".to_string(),
            );
        }
        let image = experimental::phi(&t, 4);
        let before = t.maj_k(3).expect("k valid");
        let after = experimental::maj_k(&image, 4);
        if witness.is_none() && before != after {
            witness = Some(t.clone());
            p.witnesses.push(format!(
                "naive level-4 transfer fails at tableau {t}: maj_3 = {before}, image {image} \
                 has maj_4 = {after}"
            ));
        }
    }
    let mut report = p.finish("k4-breakdown");
    if report.witnesses.is_empty() {
        report.pass = false;
        report.failures.push(CaseFailure {
            check: "a failing tableau exists".to_string(),
            input: "shape 2,2,2".to_string(),
            detail: "the naive level-4 transfer carried the statistic on every tableau".to_string(),
        });
        report.failure_count += 1;
    }
    report
}

/// Commutation of the level-2 transfer with the elementary involutions,
/// exhaustively for `3 <= n <= max_n`.
pub fn phi2_commute(max_n: usize) -> SuiteReport {
    let tasks: Vec<usize> = (3..=max_n).collect();
    let parts = shard_map(tasks, thread_count(), |n| {
        let mut p = Partial::default();
        p.absorb_check(check_phi2_commutation(n));
        p
    });
    Partial::merge(parts).finish("phi2-commute")
}

/// Top-level class characterization, exhaustively for `2 <= n <= max_n`.
pub fn nclass(max_n: usize) -> SuiteReport {
    let tasks: Vec<usize> = (2..=max_n).collect();
    let parts = shard_map(tasks, thread_count(), |n| {
        let mut p = Partial::default();
        p.absorb_check(check_n_class_characterization(n));
        p
    });
    Partial::merge(parts).finish("nclass")
}

/// Schur-shape shadow of the level-1 classes, exhaustively for `n <= max_n`.
pub fn schur_shape(max_n: usize) -> SuiteReport {
    let tasks: Vec<usize> = (1..=max_n).collect();
    let parts = shard_map(tasks, thread_count(), |n| {
        let mut p = Partial::default();
        p.absorb_check(check_1class_schur_shape(n));
        p
    });
    Partial::merge(parts).finish("schur-shape")
}

/// The candidate-family checker: the level-2 transfer passes all three
/// requirements for `n <= max_n`, while the level-3 transfer violates the
/// class-compatibility requirement on some `n <= max_n` (the suite records
/// the witness).
pub fn theta_check(max_n: usize) -> SuiteReport {
    let mut p = Partial::default();
    for n in 2..=max_n {
        let candidate = tabulate_on_sn(n, |w| phi(w, 2));
        let report = check_theta_properties(&candidate, 2, n).expect("total candidate");
        p.case(
            "level-2 transfer satisfies bijection properties",
            &|| format!("n={n}, k=2"),
            report.bijection_props.pass,
            &|| report.bijection_props.violations.join("; "),
        );
        p.case(
            "level-2 transfer carries the statistic",
            &|| format!("n={n}, k=2"),
            report.statistic_transfer.pass,
            &|| report.statistic_transfer.violations.join("; "),
        );
        p.case(
            "level-2 transfer respects the classes",
            &|| format!("n={n}, k=2"),
            report.class_compatible.pass,
            &|| report.class_compatible.violations.join("; "),
        );
    }
    let mut violation: Option<String> = None;
    for n in 4..=max_n {
        let candidate = tabulate_on_sn(n, |w| phi(w, 3));
        let report = check_theta_properties(&candidate, 3, n).expect("total candidate");
        p.case(
            "level-3 transfer satisfies bijection properties",
            &|| format!("n={n}, k=3"),
            report.bijection_props.pass,
            &|| report.bijection_props.violations.join("; "),
        );
        p.case(
            "level-3 transfer carries the statistic",
            &|| format!("n={n}, k=3"),
            report.statistic_transfer.pass,
            &|| report.statistic_transfer.violations.join("; "),
        );
        if violation.is_none() && !report.class_compatible.pass {
            violation = Some(format!(
                "level-3 transfer breaks class compatibility at n={n}: {}",
                report
                    .class_compatible
                    .violations
                    .first()
                    .cloned()
                    .unwrap_or_default()
            ));
            break;
        }
    }
    match violation {
        Some(v) => p.witnesses.push(v),
        None => p.case(
            "level-3 transfer violates class compatibility somewhere",
            &|| format!("n up to {max_n}"),
            false,
            &|| "no violation found; the level-3 transfer respected every class".to_string(),
        ),
    }
    p.finish("theta-check")
}

/// Class bookkeeping at small scale: the exact level-1 and level-2 classes
/// of `S_3`, and involutivity plus statistic constancy of the
/// distance-switched involutions for `n <= max_n`.
pub fn equivalence_basics(max_n: usize) -> SuiteReport {
    let mut head = Partial::default();
    let ones: Vec<Vec<String>> = k_classes(3, 1, None)
        .expect("valid classes")
        .iter()
        .map(|c| c.members.iter().map(Word::to_string).collect())
        .collect();
    head.case(
        "level-1 classes of S_3",
        &|| "n=3, k=1".to_string(),
        ones == vec![
            vec!["1 2 3".to_string()],
            vec!["1 3 2".to_string(), "2 3 1".to_string()],
            vec!["2 1 3".to_string(), "3 1 2".to_string()],
            vec!["3 2 1".to_string()],
        ],
        &|| format!("classes {ones:?}"),
    );
    let twos: Vec<Vec<String>> = k_classes(3, 2, None)
        .expect("valid classes")
        .iter()
        .map(|c| c.members.iter().map(Word::to_string).collect())
        .collect();
    head.case(
        "level-2 classes of S_3",
        &|| "n=3, k=2".to_string(),
        twos == vec![
            vec!["1 2 3".to_string()],
            vec!["1 3 2".to_string(), "2 1 3".to_string()],
            vec!["2 3 1".to_string(), "3 1 2".to_string()],
            vec!["3 2 1".to_string()],
        ],
        &|| format!("classes {twos:?}"),
    );

    let mut tasks: Vec<(usize, usize)> = Vec::new();
    for n in 2..=max_n {
        for k in 1..=n {
            tasks.push((n, k));
        }
    }
    let parts = shard_map(tasks, thread_count(), |(n, k)| {
        let mut p = Partial::default();
        for w in all_permutations(n) {
            for i in 2..n as u32 {
                let input = || format!("word {w}, i={i}, k={k}");
                let image = d_k(&w, i, k).expect("valid involution");
                p.case(
                    "distance-switched involution is involutive",
                    &input,
                    d_k(&image, i, k).expect("valid involution") == w,
                    &|| {
                        format!(
                            "double image {}",
                            d_k(&image, i, k).expect("valid involution")
                        )
                    },
                );
                p.case(
                    "descent set constant on orbits",
                    &input,
                    w.descent_set_k(k) == image.descent_set_k(k),
                    &|| format!("{} vs {}", w.descent_set_k(k), image.descent_set_k(k)),
                );
                p.case(
                    "inversion count constant on orbits",
                    &input,
                    w.inversion_set_k(k).len() == image.inversion_set_k(k).len(),
                    &|| {
                        format!(
                            "{} vs {}",
                            w.inversion_set_k(k).len(),
                            image.inversion_set_k(k).len()
                        )
                    },
                );
                if k == 1 {
                    let plain = d_involution(&w, i, false).expect("valid involution");
                    p.case(
                        "level 1 uses the plain involution",
                        &input,
                        image == plain,
                        &|| format!("{image} vs {plain}"),
                    );
                }
            }
        }
        p
    });
    let mut merged = Partial::merge(parts);
    merged.checked += head.checked;
    merged.failure_count += head.failure_count;
    let mut failures = head.failures;
    failures.extend(merged.failures);
    failures.truncate(FAILURE_CAP);
    merged.failures = failures;
    merged.finish("equivalence-basics")
}

/// Names of the suites reachable from the command line.
pub const SUITE_NAMES: &[&str] = &[
    "mahonian",
    "mahonian-syt",
    "phi-props",
    "phi2-commute",
    "nclass",
    "schur-shape",
    "theta-check",
    "k4-breakdown",
];

/// Run a named suite with its default size unless `max_size` overrides it.
pub fn run_suite(name: &str, max_size: Option<usize>) -> Result<SuiteReport> {
    match name {
        "mahonian" => Ok(mahonian(max_size.unwrap_or(7))),
        "mahonian-syt" => Ok(mahonian_syt(max_size.unwrap_or(8))),
        "phi-props" => Ok(phi_props(max_size.unwrap_or(7))),
        "phi2-commute" => Ok(phi2_commute(max_size.unwrap_or(7))),
        "nclass" => Ok(nclass(max_size.unwrap_or(7))),
        "schur-shape" => Ok(schur_shape(max_size.unwrap_or(6))),
        "theta-check" => Ok(theta_check(max_size.unwrap_or(7))),
        "k4-breakdown" => Ok(k4_breakdown()),
        other => Err(Error::InvalidArgument(format!(
            "unknown verification suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}
