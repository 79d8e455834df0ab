//! Partitions, cells and skew shapes.
//!
//! Everything is 1-based and drawn in English notation: row 1 is the top row,
//! column 1 the leftmost column.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell `(row, col)` of the plane. Ordered row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn below(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    /// The cell above, if it has positive coordinates.
    pub fn above(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn left(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    /// Content `col - row`, the diagonal index of the cell.
    pub fn content(self) -> isize {
        self.col as isize - self.row as isize
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [row, col] = <[usize; 2]>::deserialize(d)?;
        if row == 0 || col == 0 {
            return Err(serde::de::Error::custom("cells are 1-based"));
        }
        Ok(Cell::new(row, col))
    }
}

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// `m_i`: number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Removable corners `(r, lambda_r)` with `lambda_r > lambda_{r+1}`, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell::new(r, self.part(r)))
            .collect()
    }

    /// The partition with the given corner removed.
    pub fn remove_corner(&self, c: Cell) -> Partition {
        let mut parts = self.0.clone();
        parts[c.row - 1] -= 1;
        Partition::from_unsorted(parts)
    }

    pub fn add_cell(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || self.part(row) >= self.part(row - 1) {
            return None;
        }
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `"4,2"`; `"0"` and `""` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A skew shape `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotSkew);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(move |&c| !self.inner.contains_cell(c))
    }

    /// Recovers `outer / inner` from an arbitrary cell set, if it is a skew shape.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<SkewShape> {
        let max_row = cells.iter().map(|c| c.row).max().unwrap_or(0);
        let mut outer = vec![0usize; max_row];
        for c in cells {
            outer[c.row - 1] = outer[c.row - 1].max(c.col);
        }
        for r in (0..max_row.saturating_sub(1)).rev() {
            outer[r] = outer[r].max(outer[r + 1]);
        }
        let mut inner = vec![0usize; max_row];
        for r in 0..max_row {
            // cells of the row not in the set must be a prefix
            let row_cells: Vec<usize> =
                cells.range(Cell::new(r + 1, 0)..Cell::new(r + 2, 0)).map(|c| c.col).collect();
            let missing = outer[r] - row_cells.len();
            if row_cells.iter().enumerate().any(|(i, &c)| c != missing + i + 1) {
                return None;
            }
            inner[r] = missing;
        }
        let outer = Partition::new(outer).ok()?;
        let inner = Partition::new(inner).ok()?;
        SkewShape::new(outer, inner).ok()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `"5,3,2/3,2"` or a plain partition.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Multiset union of parts.
pub fn union(lambda: &Partition, mu: &Partition) -> Partition {
    let mut parts = lambda.parts().to_vec();
    parts.extend_from_slice(mu.parts());
    Partition::from_unsorted(parts)
}

/// `(2l_1, 2l_1, 2l_2, 2l_2, ...)`.
pub fn doubled_square(lambda: &Partition) -> Partition {
    Partition(lambda.parts().iter().flat_map(|&p| [2 * p, 2 * p]).collect())
}

/// The staircase `delta_k = (k-1, k-2, ..., 1)`.
pub fn staircase(k: usize) -> Partition {
    Partition((1..k).rev().collect())
}

/// Inclusive 1-based interval of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Self {
        Interval { start, end }
    }

    /// `[1, n]`.
    pub fn prefix(n: usize) -> Self {
        Interval { start: 1, end: n }
    }

    /// Builds an interval from a set of values, which must be consecutive.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        let mut v = values.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() || v[0] == 0 || v.windows(2).any(|w| w[1] != w[0] + 1) || v.len() != values.len()
        {
            return Err(Error::NotConsecutive(values.to_vec()));
        }
        Ok(Interval::new(v[0], *v.last().unwrap()))
    }

    pub fn len(&self) -> usize {
        (self.end + 1).saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.start <= x && x <= self.end
    }

    pub fn values(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// The blocks `B_{lambda,i}`: consecutive intervals of lengths `lambda_1, lambda_2, ...`.
pub fn blocks(lambda: &Partition) -> Vec<Interval> {
    consecutive_intervals(lambda.parts())
}

/// Consecutive intervals tiling `[1, sum]` with the given lengths.
pub fn consecutive_intervals(lengths: &[usize]) -> Vec<Interval> {
    let mut start = 1;
    lengths
        .iter()
        .map(|&len| {
            let iv = Interval::new(start, start + len - 1);
            start += len;
            iv
        })
        .collect()
}

/// `[2n-1]` minus the partial column sums `mu'_1 + ... + mu'_j`, `j < mu_1`.
pub fn max_des(mu: &Partition) -> Result<BTreeSet<usize>> {
    let size = mu.size();
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    let conj = mu.conjugate();
    let mut removed = BTreeSet::new();
    let mut acc = 0;
    for j in 1..mu.first() {
        acc += conj.part(j);
        removed.insert(acc);
    }
    Ok((1..size).filter(|d| !removed.contains(d)).collect())
}

/// The disconnected shape `lambda * mu`: `lambda` placed strictly left of and
/// below `mu`.
pub fn star(lambda: &Partition, mu: &Partition) -> SkewShape {
    let shift = lambda.first();
    let mut outer: Vec<usize> = mu.parts().iter().map(|&p| p + shift).collect();
    outer.extend_from_slice(lambda.parts());
    let inner = vec![shift; mu.len()];
    SkewShape {
        outer: Partition::from_unsorted(outer),
        inner: Partition::from_unsorted(inner),
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,2").conjugate(), p("2,2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
    }

    #[test]
    fn union_examples() {
        assert_eq!(union(&p("3,1"), &p("2,1")), p("3,2,1,1"));
        assert_eq!(union(&p("4,2"), &Partition::empty()), p("4,2"));
        assert_eq!(union(&p("2,2"), &p("2")), p("2,2,2"));
    }

    #[test]
    fn doubled_square_examples() {
        assert_eq!(doubled_square(&p("3,2")), p("6,6,4,4"));
        assert_eq!(doubled_square(&p("1")), p("2,2"));
        assert_eq!(doubled_square(&p("1,1")), p("2,2,2,2"));
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(5), p("4,3,2,1"));
        assert_eq!(staircase(1), Partition::empty());
        assert_eq!(staircase(3), p("2,1"));
    }

    #[test]
    fn block_examples() {
        assert_eq!(blocks(&p("4,2")), vec![Interval::new(1, 4), Interval::new(5, 6)]);
        assert_eq!(blocks(&p("3")), vec![Interval::new(1, 3)]);
        assert_eq!(blocks(&p("3,3")), vec![Interval::new(1, 3), Interval::new(4, 6)]);
    }

    #[test]
    fn max_des_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(max_des(&p("2,2")).unwrap(), set(&[1, 3]));
        assert_eq!(max_des(&p("1,1,1,1")).unwrap(), set(&[1, 2, 3]));
        assert_eq!(max_des(&p("4,2")).unwrap(), set(&[1, 3]));
        assert_eq!(max_des(&p("2,1")), Err(Error::OddSize(3)));
    }

    #[test]
    fn star_examples() {
        let s = star(&p("3,2"), &p("3,2"));
        assert_eq!((s.outer, s.inner), (p("6,5,3,2"), p("3,3")));
        let s = star(&Partition::empty(), &p("3,1"));
        assert_eq!((s.outer, s.inner), (p("3,1"), Partition::empty()));
        let s = star(&p("1"), &p("1"));
        assert_eq!((s.outer, s.inner), (p("2,1"), p("1")));
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]
        );
        // brute force p(n): count weakly decreasing sequences by a coin-change table
        for n in 0..=12 {
            let mut ways = vec![0usize; n + 1];
            ways[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    ways[total] += ways[total - part];
                }
            }
            assert_eq!(enumerate_partitions(n).len(), ways[n]);
        }
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn parsing() {
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p("4,2").to_string(), "4,2");
        assert_eq!(serde_json::to_string(&p("4,2")).unwrap(), "[4,2]");
    }

    #[test]
    fn skew_detection() {
        let cells: BTreeSet<Cell> =
            [Cell::new(1, 4), Cell::new(1, 5), Cell::new(2, 3), Cell::new(3, 1), Cell::new(3, 2)]
                .into_iter()
                .collect();
        let s = SkewShape::from_cells(&cells).unwrap();
        assert_eq!((s.outer, s.inner), (p("5,3,2"), p("3,2")));
        let bad: BTreeSet<Cell> = [Cell::new(1, 1), Cell::new(1, 3)].into_iter().collect();
        assert!(SkewShape::from_cells(&bad).is_none());
    }

    #[test]
    fn interval_from_values() {
        assert_eq!(Interval::from_values(&[3, 2, 4]).unwrap(), Interval::new(2, 4));
        assert!(Interval::from_values(&[1, 3]).is_err());
    }

    #[test]
    fn invariants_small_partitions() {
        for n in 0..=12 {
            for lambda in enumerate_partitions(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
                let sq = doubled_square(&lambda);
                assert_eq!(sq.size(), 4 * n);
                assert!(sq.parts().iter().all(|p| p % 2 == 0));
                assert!(sq.conjugate().parts().iter().all(|p| p % 2 == 0));
                let bl = blocks(&lambda);
                let covered: Vec<usize> = bl.iter().flat_map(|b| b.values()).collect();
                assert_eq!(covered, (1..=n).collect::<Vec<_>>());
                assert_eq!(bl.iter().map(|b| b.len()).collect::<Vec<_>>(), lambda.parts());
            }
        }
    }
}
