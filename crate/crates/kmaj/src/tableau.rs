//! Partitions, standard Young tableaux, tableau k-statistics for `k <= 3`,
//! the entry-swap bijections on tableaux, enumeration, and
//! Robinson-Schensted insertion.
//!
//! Tableaux are drawn in the French orientation: row 1 is the bottom row and
//! columns grow upward, so entries increase along rows and up columns. All
//! "south / north / east / west" language below refers to this orientation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::word::{IndexPairSet, Word};
use crate::{Error, Result};

/// A partition: a weakly decreasing sequence of positive parts.
///
/// `parts()[r]` is the length of row `r + 1` (bottom-up), so the sequence
/// also lists the row lengths of the Young diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the column through `col` (1-based).
    fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&len| len >= col).count()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let mut hooks = Vec::with_capacity(self.size());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                let arm = len - c;
                let leg = self.column_height(c) - (r + 1);
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula. An independent oracle for [`enumerate_syt`].
    pub fn syt_count(&self) -> u64 {
        let mut numerator = 1u128;
        for i in 1..=self.size() as u128 {
            numerator *= i;
        }
        let mut denominator = 1u128;
        for h in self.hook_lengths() {
            denominator *= h as u128;
        }
        (numerator / denominator) as u64
    }

    /// All partitions of `n`, parts in decreasing-first order.
    pub fn partitions_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max_part.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma- or space-separated parts, e.g. `4,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            parts.push(
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))?,
            );
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// A cell of a Young diagram in the lattice-quadrant convention:
/// `col` counts from the left, `row` from the bottom, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

/// A standard Young tableau: the cells of a partition diagram filled with
/// `1..=n`, increasing along rows and up columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct StandardTableau {
    /// Bottom row first.
    rows: Vec<Vec<u32>>,
    /// `cells[e - 1]` is the cell holding entry `e`.
    cells: Vec<Cell>,
}

impl StandardTableau {
    /// Build from rows listed bottom-up, validating shape and standardness.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease bottom-up".into(),
            ));
        }
        let mut cells = vec![Cell { col: 0, row: 0 }; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e as usize > n || cells[e as usize - 1].col != 0 {
                    return Err(Error::InvalidTableau(format!(
                        "entries must be exactly 1..={n}, saw {e} twice or out of range"
                    )));
                }
                cells[e as usize - 1] = Cell {
                    col: c + 1,
                    row: r + 1,
                };
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for c in 1..row.len() {
                if row[c - 1] >= row[c] {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not increasing",
                        r + 1
                    )));
                }
            }
            if r > 0 {
                for (c, &e) in row.iter().enumerate() {
                    if rows[r - 1][c] >= e {
                        return Err(Error::InvalidTableau(format!(
                            "column {} is not increasing upward",
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(StandardTableau { rows, cells })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// The cell holding `entry` (which must be in `1..=size`).
    pub fn cell_of(&self, entry: u32) -> Cell {
        self.cells[entry as usize - 1]
    }

    pub fn entry_at(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row.checked_sub(1)?)
            .and_then(|r| r.get(cell.col.checked_sub(1)?))
            .copied()
    }

    /// The attack relation: `i` attacks `m` if `i` lies strictly south and
    /// weakly east of `m`, or `i` lies strictly southwest of `m` and `i + 1`
    /// attacks `m`. Requires `1 <= i < m <= size`.
    pub fn attacks(&self, i: u32, m: u32) -> Result<bool> {
        if i < 1 || i >= m || m as usize > self.size() {
            return Err(Error::InvalidArgument(format!(
                "attacks requires 1 <= i < m <= {}, got ({i}, {m})",
                self.size()
            )));
        }
        Ok(self.attacks_unchecked(i, m))
    }

    fn attacks_unchecked(&self, i: u32, m: u32) -> bool {
        let target = self.cell_of(m);
        let mut cur = i;
        while cur < m {
            let c = self.cell_of(cur);
            if c.row < target.row && c.col >= target.col {
                return true; // strictly south, weakly east
            }
            if c.row < target.row && c.col < target.col {
                cur += 1; // strictly southwest: defer to the next entry
                continue;
            }
            return false; // weakly north (hence strictly west)
        }
        false
    }

    /// Whether `m` splits the pair `a, b`: exactly one of them attacks `m`.
    fn splits_pair(&self, m: u32, a: u32, b: u32) -> bool {
        self.attacks_unchecked(a, m) != self.attacks_unchecked(b, m)
    }

    /// Classical descent set `{(i, i+1) : i strictly south of i+1}`.
    pub fn descent_set(&self) -> IndexPairSet {
        let mut set = IndexPairSet::new();
        for i in 1..self.size() as u32 {
            if self.cell_of(i).row < self.cell_of(i + 1).row {
                set.insert(i as usize, i as usize + 1);
            }
        }
        set
    }

    /// Classical major index: the sum of the descents.
    pub fn maj(&self) -> usize {
        self.descent_set().first_index_sum()
    }

    fn descent_set_k_any(&self, k: usize) -> IndexPairSet {
        assert!(k >= 1, "k must be a positive integer");
        let n = self.size();
        let mut set = IndexPairSet::new();
        for i in 1..=n.saturating_sub(k) {
            if self.attacks_unchecked(i as u32, (i + k) as u32) {
                set.insert(i, i + k);
            }
        }
        set
    }

    fn inversion_set_k_any(&self, k: usize) -> IndexPairSet {
        let mut set = IndexPairSet::new();
        for j in 1..k {
            set = set.union(&self.descent_set_k_any(j));
        }
        set
    }

    fn maj_k_any(&self, k: usize) -> usize {
        self.inversion_set_k_any(k).len() + self.descent_set_k_any(k).first_index_sum()
    }

    fn check_k(&self, k: usize, limit: usize) -> Result<()> {
        if !(1..=limit).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "tableau operation defined for k in 1..={limit}, got {k}"
            )));
        }
        Ok(())
    }

    /// The k-descent set `{(i, i+k) : i attacks i+k}`, for `k` in `1..=3`.
    pub fn descent_set_k(&self, k: usize) -> Result<IndexPairSet> {
        self.check_k(k, 3)?;
        Ok(self.descent_set_k_any(k))
    }

    /// The k-inversion set: the union of the j-descent sets over `j < k`.
    pub fn inversion_set_k(&self, k: usize) -> Result<IndexPairSet> {
        self.check_k(k, 3)?;
        Ok(self.inversion_set_k_any(k))
    }

    /// The tableau k-major index, for `k` in `1..=3`.
    pub fn maj_k(&self, k: usize) -> Result<usize> {
        self.check_k(k, 3)?;
        Ok(self.maj_k_any(k))
    }

    fn gamma_chain(&self, j: u32, k: usize) -> Vec<u32> {
        let kk = k as u32;
        let mut chain = Vec::new();
        if j > kk && self.splits_pair(j, j - kk, j - kk + 1) {
            chain.push(j - kk);
            let mut i = j - kk;
            while i > kk {
                let lower = self.splits_pair(i, i - kk, i - kk + 1);
                let upper = self.splits_pair(i + 1, i - kk, i - kk + 1);
                if lower == upper {
                    break;
                }
                chain.push(i - kk);
                i -= kk;
            }
        }
        chain
    }

    fn gamma_any(&self, j: u32, k: usize) -> StandardTableau {
        assert!(k >= 2, "gamma requires k >= 2");
        assert!(j >= 1 && j as usize <= self.size(), "entry j out of range");
        let chain = self.gamma_chain(j, k);
        let mut rows = self.rows.clone();
        for &e in &chain {
            let a = self.cell_of(e);
            let b = self.cell_of(e + 1);
            rows[a.row - 1][a.col - 1] = e + 1;
            rows[b.row - 1][b.col - 1] = e;
        }
        // A swapped pair is always split by some entry, so its members are
        // never in the same row or column and the filling stays standard.
        StandardTableau::from_rows(rows).expect("entry swap preserves standardness")
    }

    fn phi_any(&self, k: usize) -> StandardTableau {
        let mut cur = self.clone();
        for j in (k as u32 + 1)..=self.size() as u32 {
            cur = cur.gamma_any(j, k);
        }
        cur
    }

    fn psi_any(&self, k: usize) -> StandardTableau {
        let mut cur = self.clone();
        for j in ((k as u32 + 1)..=self.size() as u32).rev() {
            cur = cur.gamma_any(j, k);
        }
        cur
    }

    /// Swap entries `i <-> i+1` along the chain selected at entry `j` with
    /// step `k` (2 or 3). The output is standard and the map is an
    /// involution; `j <= k` gives the identity.
    pub fn gamma(&self, j: u32, k: usize) -> Result<StandardTableau> {
        if !(2..=3).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "tableau gamma is defined for k in 2..=3, got {k}"
            )));
        }
        if j < 1 || j as usize > self.size() {
            return Err(Error::InvalidArgument(format!(
                "entry j must be in 1..={}, got {j}",
                self.size()
            )));
        }
        Ok(self.gamma_any(j, k))
    }

    /// The tableau maj-transfer bijection at step `k` (2 or 3): the
    /// composition of [`StandardTableau::gamma`] over `j = 1..=n`. Satisfies
    /// `maj_{k-1}(T) = maj_k(phi(T, k))` and fixes the cell of the largest
    /// entry.
    pub fn phi(&self, k: usize) -> Result<StandardTableau> {
        if !(2..=3).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "tableau phi is defined for k in 2..=3, got {k}"
            )));
        }
        Ok(self.phi_any(k))
    }

    /// The inverse of [`StandardTableau::phi`]: the same swaps composed in
    /// the opposite order.
    pub fn psi(&self, k: usize) -> Result<StandardTableau> {
        if !(2..=3).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "tableau psi is defined for k in 2..=3, got {k}"
            )));
        }
        Ok(self.psi_any(k))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Parses `/`-separated rows listed bottom-up, entries space- or
    /// comma-separated, e.g. `1 3 4 7 / 2 5 6 / 8`.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for row in s.split('/') {
            let mut entries = Vec::new();
            for tok in row
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                entries.push(
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?,
                );
            }
            rows.push(entries);
        }
        StandardTableau::from_rows(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, row) in self.rows.iter().enumerate() {
            if n > 0 {
                write!(f, " / ")?;
            }
            for (m, e) in row.iter().enumerate() {
                if m > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl TryFrom<TableauRepr> for StandardTableau {
    type Error = Error;
    fn try_from(repr: TableauRepr) -> Result<Self> {
        let t = StandardTableau::from_rows(repr.rows)?;
        if t.shape().parts() != repr.shape.as_slice() {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} does not match rows",
                repr.shape
            )));
        }
        Ok(t)
    }
}

impl From<StandardTableau> for TableauRepr {
    fn from(t: StandardTableau) -> Self {
        TableauRepr {
            shape: t.shape().parts.clone(),
            rows: t.rows,
        }
    }
}

/// Naive extension of the tableau machinery beyond `k = 3`, with the attack
/// relation unchanged. The statistic transfer genuinely fails here (see the
/// k4-breakdown verification suite); exposed for exploration only.
pub mod experimental {
    use super::StandardTableau;
    use crate::word::IndexPairSet;

    pub fn descent_set_k(t: &StandardTableau, k: usize) -> IndexPairSet {
        t.descent_set_k_any(k)
    }

    pub fn inversion_set_k(t: &StandardTableau, k: usize) -> IndexPairSet {
        t.inversion_set_k_any(k)
    }

    pub fn maj_k(t: &StandardTableau, k: usize) -> usize {
        t.maj_k_any(k)
    }

    pub fn gamma(t: &StandardTableau, j: u32, k: usize) -> StandardTableau {
        t.gamma_any(j, k)
    }

    pub fn phi(t: &StandardTableau, k: usize) -> StandardTableau {
        t.phi_any(k)
    }

    pub fn psi(t: &StandardTableau, k: usize) -> StandardTableau {
        t.psi_any(k)
    }
}

/// All standard Young tableaux of `shape`, each exactly once, in a fixed
/// deterministic order. The count equals [`Partition::syt_count`].
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();

    fn rec(
        entry: u32,
        n: usize,
        parts: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entry as usize > n {
            out.push(
                StandardTableau::from_rows(rows.clone()).expect("generated filling is standard"),
            );
            return;
        }
        for r in 0..parts.len() {
            let filled = rows[r].len();
            if filled < parts[r] && (r == 0 || rows[r - 1].len() > filled) {
                rows[r].push(entry);
                rec(entry + 1, n, parts, rows, out);
                rows[r].pop();
            }
        }
    }

    rec(1, n, &parts, &mut rows, &mut out);
    out
}

/// Row-insertion Robinson-Schensted correspondence for a spacer-free
/// permutation `w`, returning a pair `(P, Q)` of standard tableaux of the
/// same shape.
///
/// `Q` is the insertion tableau and `P` the recording tableau — the
/// reflection of the classical pairing for `w` (equivalently, the classical
/// pairing for the inverse of `w`) — so that the descent positions of `Q`
/// are exactly `ides(w)`.
pub fn rsk(w: &Word) -> Result<(StandardTableau, StandardTableau)> {
    if w.has_spacers() {
        return Err(Error::NotAPermutation(
            "insertion is defined on spacer-free permutations".into(),
        ));
    }
    if !w.is_permutation() {
        return Err(Error::NotAPermutation(format!(
            "{w} does not rearrange 1..=n"
        )));
    }
    let mut insertion: Vec<Vec<u32>> = Vec::new();
    let mut recording: Vec<Vec<u32>> = Vec::new();
    for (step, letter) in w.letters().iter().enumerate() {
        let mut x = letter.value().expect("spacer-free");
        let mut r = 0;
        loop {
            if r == insertion.len() {
                insertion.push(vec![x]);
                recording.push(vec![step as u32 + 1]);
                break;
            }
            match insertion[r].iter().position(|&y| y > x) {
                Some(c) => {
                    std::mem::swap(&mut insertion[r][c], &mut x);
                    r += 1;
                }
                None => {
                    insertion[r].push(x);
                    recording[r].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    let q = StandardTableau::from_rows(insertion)?;
    let p = StandardTableau::from_rows(recording)?;
    Ok((p, q))
}

/// The set of descent positions of a tableau: `{i : (i, i+1) in Des(T)}`.
pub fn descent_positions(t: &StandardTableau) -> BTreeSet<u32> {
    t.descent_set().iter().map(|(i, _)| i as u32).collect()
}
