//! Fillings of cell sets: validation, statistics, reading words and enumeration.
//!
//! A [`Tableau`] is stored sparsely as a map from cells to entries, so any set
//! of cells is allowed as a shape. Intermediate states of sliding and switching
//! are not always skew shapes.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{blocks, enumerate_partitions, Cell, Interval, Partition, SkewShape};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    entries: BTreeMap<Cell, usize>,
}

impl Tableau {
    pub fn new(entries: BTreeMap<Cell, usize>) -> Result<Self> {
        if entries.values().any(|&e| e == 0) {
            return Err(Error::Precondition("tableau entries must be positive".into()));
        }
        if entries.keys().any(|c| c.row == 0 || c.col == 0) {
            return Err(Error::Precondition("cells are 1-based".into()));
        }
        Ok(Tableau { entries })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn from_cells<I: IntoIterator<Item = (Cell, usize)>>(cells: I) -> Result<Self> {
        Tableau::new(cells.into_iter().collect())
    }

    /// Straight-shape tableau from its rows, top to bottom.
    pub fn from_rows(rows: &[&[usize]]) -> Result<Self> {
        Tableau::from_cells(rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(c, &e)| (Cell::new(r + 1, c + 1), e))
        }))
    }

    pub(crate) fn from_map_unchecked(entries: BTreeMap<Cell, usize>) -> Self {
        Tableau { entries }
    }

    pub fn entries(&self) -> &BTreeMap<Cell, usize> {
        &self.entries
    }

    pub fn into_entries(self) -> BTreeMap<Cell, usize> {
        self.entries
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        self.entries.get(&c).copied()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.entries.contains_key(&c)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.entries.iter().map(|(&c, &e)| (c, e))
    }

    pub fn max_row(&self) -> usize {
        self.entries.keys().map(|c| c.row).max().unwrap_or(0)
    }

    /// The skew shape `outer / inner` occupied by the tableau, if the cell set is one.
    pub fn skew_shape(&self) -> Option<SkewShape> {
        SkewShape::from_cells(&self.cells())
    }

    /// The straight shape, if the cells form a Young diagram.
    pub fn straight_shape(&self) -> Option<Partition> {
        self.skew_shape().filter(|s| s.is_straight()).map(|s| s.outer)
    }

    pub fn is_column_strict(&self) -> bool {
        self.entries.keys().all(|&c| self.consistent_at(c))
    }

    /// Column-strictness conditions between `c` and every other cell.
    pub(crate) fn consistent_at(&self, c: Cell) -> bool {
        let e = self.entries[&c];
        self.iter().all(|(d, f)| {
            if d == c {
                return true;
            }
            if d.row <= c.row && d.col <= c.col {
                f <= e && !(d.col == c.col && f == e)
            } else if c.row <= d.row && c.col <= d.col {
                e <= f && !(d.col == c.col && f == e)
            } else {
                true
            }
        })
    }

    /// Column-strict and the cell set is a skew shape.
    pub fn is_semistandard(&self) -> bool {
        self.skew_shape().is_some() && self.is_column_strict()
    }

    /// `wt_i`: occurrences of each value `i >= 1`, trailing zeros trimmed.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.entries.values().copied().max().unwrap_or(0);
        let mut wt = vec![0; max];
        for &e in self.entries.values() {
            wt[e - 1] += 1;
        }
        wt
    }

    /// Rows from the bottom up, each read left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut by_row: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, e) in self.iter() {
            by_row.entry(c.row).or_default().push(e);
        }
        by_row.into_values().rev().flatten().collect()
    }

    /// Replaces entries by `1..n`, smaller entries first and ties left to right.
    pub fn standardize(&self) -> Result<StandardTableau> {
        if !self.is_column_strict() {
            return Err(Error::NotColumnStrict);
        }
        let mut cells: Vec<(usize, usize, Cell)> =
            self.iter().map(|(c, e)| (e, c.col, c)).collect();
        cells.sort_unstable();
        let entries = cells.into_iter().enumerate().map(|(i, (_, _, c))| (c, i + 1)).collect();
        Ok(StandardTableau(Tableau { entries }))
    }

    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tableau {
        Tableau { entries: self.iter().map(|(c, e)| (c, f(e))).collect() }
    }

    /// Moves every cell by `(dr, dc)`. Panics if a cell would leave the positive quadrant.
    pub fn translate(&self, dr: isize, dc: isize) -> Tableau {
        let mv = |x: usize, d: isize| -> usize {
            let v = x as isize + d;
            assert!(v >= 1, "translation leaves the positive quadrant");
            v as usize
        };
        Tableau {
            entries: self
                .iter()
                .map(|(c, e)| (Cell::new(mv(c.row, dr), mv(c.col, dc)), e))
                .collect(),
        }
    }

    /// Disjoint union of two tableaux on disjoint cell sets.
    pub fn union(&self, other: &Tableau) -> Result<Tableau> {
        let mut entries = self.entries.clone();
        for (c, e) in other.iter() {
            if entries.insert(c, e).is_some() {
                return Err(Error::Precondition(format!("cell {c} occupied twice")));
            }
        }
        Ok(Tableau { entries })
    }

    fn rows_for_json(&self) -> Vec<Vec<Option<usize>>> {
        (1..=self.max_row())
            .map(|r| {
                let width = self
                    .entries
                    .range(Cell::new(r, 0)..Cell::new(r + 1, 0))
                    .map(|(c, _)| c.col)
                    .max()
                    .unwrap_or(0);
                (1..=width).map(|c| self.get(Cell::new(r, c))).collect()
            })
            .collect()
    }

    /// Outer and inner envelope: exact for skew shapes.
    fn envelope(&self) -> (Partition, Partition) {
        if let Some(s) = self.skew_shape() {
            return (s.outer, s.inner);
        }
        let rows = self.max_row();
        let mut outer = vec![0; rows];
        for c in self.entries.keys() {
            outer[c.row - 1] = outer[c.row - 1].max(c.col);
        }
        for r in (0..rows.saturating_sub(1)).rev() {
            outer[r] = outer[r].max(outer[r + 1]);
        }
        let mut inner = vec![0; rows];
        let mut running = usize::MAX;
        for r in 0..rows {
            let left = self
                .entries
                .range(Cell::new(r + 1, 0)..Cell::new(r + 2, 0))
                .next()
                .map(|(c, _)| c.col - 1)
                .unwrap_or(outer[r]);
            running = running.min(left).min(outer[r]);
            inner[r] = running;
        }
        (Partition::from_unsorted(outer), Partition::from_unsorted(inner))
    }
}

impl fmt::Display for Tableau {
    /// Rows separated by `/`, entries by spaces, absent cells as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows_for_json()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| e.map_or_else(|| ".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut entries = BTreeMap::new();
        for (r, row) in s.split('/').enumerate() {
            for (c, tok) in row.split_whitespace().enumerate() {
                if tok == "." {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?;
                entries.insert(Cell::new(r + 1, c + 1), v);
            }
        }
        Tableau::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<Option<usize>>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (outer, inner) = self.envelope();
        TableauJson { outer, inner, rows: self.rows_for_json() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = TableauJson::deserialize(d)?;
        let entries = json
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter().enumerate().filter_map(move |(c, e)| e.map(|v| (Cell::new(r + 1, c + 1), v)))
            })
            .collect();
        Tableau::new(entries).map_err(serde::de::Error::custom)
    }
}

/// A tableau validated standard: column-strict with entries exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StandardTableau(Tableau);

impl TryFrom<Tableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<Self> {
        let mut seen = vec![false; t.len()];
        for (_, e) in t.iter() {
            if e > t.len() || std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::NotStandard);
            }
        }
        if !t.is_column_strict() {
            return Err(Error::NotStandard);
        }
        Ok(StandardTableau(t))
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        StandardTableau::try_from(Tableau::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Deref for StandardTableau {
    type Target = Tableau;

    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::try_from(s.parse::<Tableau>()?)
    }
}

impl StandardTableau {
    pub(crate) fn new_unchecked(t: Tableau) -> Self {
        StandardTableau(t)
    }

    pub fn from_rows(rows: &[&[usize]]) -> Result<Self> {
        StandardTableau::try_from(Tableau::from_rows(rows)?)
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    /// Cell holding each entry, indexed by `entry - 1`.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.len()];
        for (c, e) in self.iter() {
            pos[e - 1] = c;
        }
        pos
    }

    /// `i` such that `i + 1` lies in a lower row than `i`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let pos = self.positions();
        (1..pos.len()).filter(|&i| pos[i].row > pos[i - 1].row).collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// The `i`-th block-major index with respect to `lambda` (1-based `i`).
    pub fn block_maj(&self, lambda: &Partition, i: usize) -> usize {
        let block = blocks(lambda)[i - 1];
        let offset = block.start - 1;
        self.descent_set()
            .into_iter()
            .filter(|&d| block.contains(d) && block.contains(d + 1))
            .map(|d| d - offset)
            .sum()
    }

    /// `T_I`: the subtableau on the entries in `interval`, entries unchanged.
    pub fn restrict(&self, interval: Interval) -> Result<Tableau> {
        if interval.start == 0 || interval.end > self.len() || interval.start > interval.end + 1 {
            return Err(Error::IntervalOutOfRange {
                start: interval.start,
                end: interval.end,
                size: self.len(),
            });
        }
        Ok(Tableau {
            entries: self.iter().filter(|&(_, e)| interval.contains(e)).collect(),
        })
    }
}

/// Every suffix has at least as many `i` as `i + 1`.
pub fn is_yamanouchi(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &w in word.iter().rev() {
        if w == 0 {
            return false;
        }
        if counts.len() < w {
            counts.resize(w, 0);
        }
        counts[w - 1] += 1;
        if w > 1 && counts[w - 1] > counts[w - 2] {
            return false;
        }
    }
    true
}

/// Semistandard of weight `nu` with a Yamanouchi reading word.
pub fn is_lr_tableau(t: &Tableau, nu: &Partition) -> bool {
    t.is_semistandard() && t.weight() == nu.parts() && is_yamanouchi(&t.reading_word())
}

/// `1_lambda`: row `i` filled with `i`.
pub fn canonical_one(lambda: &Partition) -> Tableau {
    Tableau { entries: lambda.cells().map(|c| (c, c.row)).collect() }
}

/// `Q_lambda`: `1..|lambda|` filled row by row.
pub fn canonical_row_filling(lambda: &Partition) -> StandardTableau {
    StandardTableau(Tableau {
        entries: lambda.cells().enumerate().map(|(i, c)| (c, i + 1)).collect(),
    })
}

/// All standard tableaux of a skew shape, built by removing the largest
/// entry from an outer corner, corners taken top to bottom.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<StandardTableau> {
    fn rec(
        outer: &Partition,
        inner: &Partition,
        n: usize,
        cur: &mut BTreeMap<Cell, usize>,
        out: &mut Vec<StandardTableau>,
    ) {
        if n == 0 {
            out.push(StandardTableau(Tableau { entries: cur.clone() }));
            return;
        }
        for corner in outer.corners() {
            if inner.contains_cell(corner) {
                continue;
            }
            cur.insert(corner, n);
            rec(&outer.remove_corner(corner), inner, n - 1, cur, out);
            cur.remove(&corner);
        }
    }
    let mut out = Vec::new();
    rec(&shape.outer, &shape.inner, shape.size(), &mut BTreeMap::new(), &mut out);
    out
}

/// `SYT(n)`: all straight-shape standard tableaux of size `n`, grouped by shape
/// in decreasing lexicographic order of shapes.
pub fn enumerate_syt_of_size(n: usize) -> Vec<StandardTableau> {
    enumerate_partitions(n)
        .into_iter()
        .flat_map(|mu| enumerate_syt(&SkewShape::straight(mu)))
        .collect()
}

/// All Littlewood–Richardson tableaux of the given skew shape and weight.
///
/// Cells are filled row by row from the top, each row right to left, which is
/// the reverse reading order, so the Yamanouchi condition becomes a lattice
/// condition on prefixes.
pub fn enumerate_lr(shape: &SkewShape, nu: &Partition) -> Vec<Tableau> {
    if shape.size() != nu.size() {
        return Vec::new();
    }
    let order: Vec<Cell> = (1..=shape.outer.len())
        .flat_map(|r| {
            let lo = shape.inner.part(r) + 1;
            let hi = shape.outer.part(r);
            (lo..=hi).rev().map(move |c| Cell::new(r, c))
        })
        .collect();
    let parts = nu.parts().to_vec();

    fn rec(
        idx: usize,
        order: &[Cell],
        shape: &SkewShape,
        parts: &[usize],
        counts: &mut Vec<usize>,
        cur: &mut BTreeMap<Cell, usize>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == order.len() {
            out.push(Tableau { entries: cur.clone() });
            return;
        }
        let c = order[idx];
        let max = cur.get(&c.right()).copied().unwrap_or(parts.len());
        let min = c.above().and_then(|a| cur.get(&a)).map_or(1, |&v| v + 1);
        for v in min..=max.min(parts.len()) {
            if counts[v - 1] >= parts[v - 1] || (v > 1 && counts[v - 1] >= counts[v - 2]) {
                continue;
            }
            counts[v - 1] += 1;
            cur.insert(c, v);
            rec(idx + 1, order, shape, parts, counts, cur, out);
            cur.remove(&c);
            counts[v - 1] -= 1;
        }
        let _ = shape;
    }
    let mut out = Vec::new();
    let mut counts = vec![0; parts.len()];
    rec(0, &order, shape, &parts, &mut counts, &mut BTreeMap::new(), &mut out);
    out
}

/// The total order on straight-shape standard tableaux: by size, then
/// lexicographically by reading word.
pub fn tableau_cmp(p: &StandardTableau, q: &StandardTableau) -> Ordering {
    p.len().cmp(&q.len()).then_with(|| p.reading_word().cmp(&q.reading_word()))
}

pub fn tableau_leq(p: &StandardTableau, q: &StandardTableau) -> bool {
    tableau_cmp(p, q) != Ordering::Greater
}
