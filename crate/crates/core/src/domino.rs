//! Domino tableaux: validation, column reading word, spin, and enumeration of
//! Yamanouchi domino tableaux.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{doubled_square, Cell, Partition};
use crate::tableau::is_yamanouchi;

/// Two adjacent cells carrying one label. Cells are kept in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DominoJson")]
pub struct Domino {
    pub cells: [Cell; 2],
    pub label: usize,
}

#[derive(Deserialize)]
struct DominoJson {
    cells: [Cell; 2],
    label: usize,
}

impl TryFrom<DominoJson> for Domino {
    type Error = Error;

    fn try_from(d: DominoJson) -> Result<Self> {
        Domino::new(d.cells[0], d.cells[1], d.label)
    }
}

impl Domino {
    pub fn new(a: Cell, b: Cell, label: usize) -> Result<Self> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if b != a.below() && b != a.right() {
            return Err(Error::InvalidDomino(format!("cells {a} and {b} are not adjacent")));
        }
        if label == 0 {
            return Err(Error::InvalidDomino("labels must be positive".into()));
        }
        Ok(Domino { cells: [a, b], label })
    }

    pub fn vertical(top: Cell, label: usize) -> Self {
        Domino { cells: [top, top.below()], label }
    }

    pub fn horizontal(left: Cell, label: usize) -> Self {
        Domino { cells: [left, left.right()], label }
    }

    pub fn is_vertical(&self) -> bool {
        self.cells[0].col == self.cells[1].col
    }

    pub fn is_horizontal(&self) -> bool {
        !self.is_vertical()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells[0] == c || self.cells[1] == c
    }

    /// The cell read by the column reading word: the lower cell of a vertical
    /// domino, the left cell of a horizontal one.
    fn reading_cell(&self) -> Cell {
        if self.is_vertical() {
            self.cells[1]
        } else {
            self.cells[0]
        }
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}:{}", self.cells[0], self.cells[1], self.label)
    }
}

/// A labelled domino tiling of `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DominoTableauJson")]
pub struct DominoTableau {
    pub outer: Partition,
    pub inner: Partition,
    dominoes: Vec<Domino>,
}

#[derive(Deserialize)]
struct DominoTableauJson {
    outer: Partition,
    inner: Partition,
    dominoes: Vec<Domino>,
}

impl TryFrom<DominoTableauJson> for DominoTableau {
    type Error = Error;

    fn try_from(d: DominoTableauJson) -> Result<Self> {
        DominoTableau::new(d.outer, d.inner, d.dominoes)
    }
}

impl DominoTableau {
    /// Builds and validates a domino tableau.
    pub fn new(outer: Partition, inner: Partition, dominoes: Vec<Domino>) -> Result<Self> {
        let d = DominoTableau::new_unchecked(outer, inner, dominoes);
        d.check()?;
        Ok(d)
    }

    /// Builds without validation; dominoes are sorted into canonical order.
    pub fn new_unchecked(outer: Partition, inner: Partition, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort();
        DominoTableau { outer, inner, dominoes }
    }

    pub fn empty() -> Self {
        DominoTableau::new_unchecked(Partition::empty(), Partition::empty(), Vec::new())
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    /// Map from each covered cell to the index of its domino.
    pub fn cell_index(&self) -> BTreeMap<Cell, usize> {
        self.dominoes
            .iter()
            .enumerate()
            .flat_map(|(i, d)| d.cells.iter().map(move |&c| (c, i)))
            .collect()
    }

    /// The label of the domino covering `c`.
    pub fn label_at(&self, c: Cell) -> Option<usize> {
        self.dominoes.iter().find(|d| d.contains(c)).map(|d| d.label)
    }

    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Exact tiling of `outer / inner` with labels weakly increasing along rows
    /// and strictly increasing down columns, read cell by cell.
    pub fn check(&self) -> Result<()> {
        if !self.outer.contains(&self.inner) {
            return Err(Error::InvalidDomino(format!(
                "inner {} not contained in outer {}",
                self.inner, self.outer
            )));
        }
        let mut labels: BTreeMap<Cell, (usize, usize)> = BTreeMap::new();
        for (i, d) in self.dominoes.iter().enumerate() {
            if d.cells[1] != d.cells[0].below() && d.cells[1] != d.cells[0].right() {
                return Err(Error::InvalidDomino(format!("domino {d} is not two adjacent cells")));
            }
            for &c in &d.cells {
                if !self.outer.contains_cell(c) || self.inner.contains_cell(c) {
                    return Err(Error::InvalidDomino(format!("cell {c} lies outside the shape")));
                }
                if labels.insert(c, (i, d.label)).is_some() {
                    return Err(Error::InvalidDomino(format!("cell {c} covered twice")));
                }
            }
        }
        let area = self.outer.size() - self.inner.size();
        if labels.len() != area {
            return Err(Error::InvalidDomino("tiling does not cover the shape".into()));
        }
        for (&c, &(i, a)) in &labels {
            if let Some(&(j, b)) = labels.get(&c.right()) {
                if j != i && a > b {
                    return Err(Error::InvalidDomino(format!("row decreases at {c}")));
                }
            }
            if let Some(&(j, b)) = labels.get(&c.below()) {
                if j != i && a >= b {
                    return Err(Error::InvalidDomino(format!("column not strict at {c}")));
                }
            }
        }
        Ok(())
    }

    /// Columns left to right, each bottom to top, one letter per domino.
    pub fn column_reading_word(&self) -> Vec<usize> {
        let mut keyed: Vec<((usize, std::cmp::Reverse<usize>), usize)> = self
            .dominoes
            .iter()
            .map(|d| {
                let c = d.reading_cell();
                ((c.col, std::cmp::Reverse(c.row)), d.label)
            })
            .collect();
        keyed.sort_unstable();
        keyed.into_iter().map(|(_, l)| l).collect()
    }

    pub fn is_yamanouchi(&self) -> bool {
        is_yamanouchi(&self.column_reading_word())
    }

    /// Occurrences of each label, trailing zeros trimmed.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.dominoes.iter().map(|d| d.label).max().unwrap_or(0);
        let mut wt = vec![0; max];
        for d in &self.dominoes {
            wt[d.label - 1] += 1;
        }
        wt
    }

    pub fn h_count(&self) -> usize {
        self.dominoes.iter().filter(|d| d.is_horizontal()).count()
    }

    pub fn v_count(&self) -> usize {
        self.dominoes.iter().filter(|d| d.is_vertical()).count()
    }

    /// Half the number of vertical dominoes.
    pub fn spin(&self) -> Rational64 {
        Rational64::new(self.v_count() as i64, 2)
    }

    /// Plain ASCII drawing with `+`, `-` and `|` borders and labels in the
    /// top or left cell of each domino.
    pub fn render_ascii(&self) -> String {
        let rows = self.outer.len();
        let cols = self.outer.first();
        if rows == 0 {
            return String::new();
        }
        let index = self.cell_index();
        let owner = |r: usize, c: usize| -> Option<usize> {
            if r == 0 || c == 0 {
                None
            } else {
                index.get(&Cell::new(r, c)).copied()
            }
        };
        let present = |r: usize, c: usize| owner(r, c).is_some();
        let mut grid = vec![vec![' '; 3 * cols + 1]; 2 * rows + 1];
        for r in 1..=rows + 1 {
            for c in 1..=cols + 1 {
                let around = [(r - 1, c - 1), (r - 1, c), (r, c - 1), (r, c)];
                if around.iter().any(|&(a, b)| present(a, b)) {
                    grid[2 * (r - 1)][3 * (c - 1)] = '+';
                }
            }
        }
        for r in 1..=rows + 1 {
            for c in 1..=cols {
                if owner(r - 1, c) != owner(r, c) {
                    grid[2 * (r - 1)][3 * (c - 1) + 1] = '-';
                    grid[2 * (r - 1)][3 * (c - 1) + 2] = '-';
                }
            }
        }
        for r in 1..=rows {
            for c in 1..=cols + 1 {
                if owner(r, c - 1) != owner(r, c) {
                    grid[2 * r - 1][3 * (c - 1)] = '|';
                }
            }
        }
        for d in &self.dominoes {
            let c = d.cells[0];
            let text = format!("{:>2}", d.label);
            for (k, ch) in text.chars().take(2).enumerate() {
                grid[2 * c.row - 1][3 * (c.col - 1) + 1 + k] = ch;
            }
        }
        let lines: Vec<String> =
            grid.into_iter().map(|l| l.into_iter().collect::<String>().trim_end().to_string()).collect();
        lines.join("\n")
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dominoes.iter().map(|d| d.to_string()).collect();
        write!(f, "{}/{} [{}]", self.outer, self.inner, parts.join(" "))
    }
}

/// All domino tilings of `outer / inner`, found by covering the first
/// untiled cell in row-major order.
pub fn enumerate_tilings(outer: &Partition, inner: &Partition) -> Vec<Vec<[Cell; 2]>> {
    fn rec(
        cells: &[Cell],
        covered: &mut BTreeSet<Cell>,
        inside: &BTreeSet<Cell>,
        cur: &mut Vec<[Cell; 2]>,
        out: &mut Vec<Vec<[Cell; 2]>>,
    ) {
        let Some(&first) = cells.iter().find(|c| !covered.contains(c)) else {
            out.push(cur.clone());
            return;
        };
        for other in [first.right(), first.below()] {
            if inside.contains(&other) && !covered.contains(&other) {
                covered.insert(first);
                covered.insert(other);
                cur.push([first, other]);
                rec(cells, covered, inside, cur, out);
                cur.pop();
                covered.remove(&other);
                covered.remove(&first);
            }
        }
    }
    let cells: Vec<Cell> = outer.cells().filter(|&c| !inner.contains_cell(c)).collect();
    let inside: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut out = Vec::new();
    if cells.len().is_multiple_of(2) {
        rec(&cells, &mut BTreeSet::new(), &inside, &mut Vec::new(), &mut out);
    }
    out
}

/// Yamanouchi labellings of one tiling, optionally of a fixed weight.
fn yamanouchi_labellings(
    outer: &Partition,
    inner: &Partition,
    tiling: &[[Cell; 2]],
    weight: Option<&[usize]>,
    out: &mut Vec<DominoTableau>,
) {
    let m = tiling.len();
    let mut order: Vec<usize> = (0..m).collect();
    let reading_cell = |d: &[Cell; 2]| if d[0].col == d[1].col { d[1] } else { d[0] };
    // reverse of the column reading order: columns right to left, each top to bottom
    order.sort_by_key(|&i| {
        let c = reading_cell(&tiling[i]);
        (std::cmp::Reverse(c.col), c.row)
    });
    let owner: BTreeMap<Cell, usize> =
        tiling.iter().enumerate().flat_map(|(i, d)| d.iter().map(move |&c| (c, i))).collect();
    let max_label = weight.map_or(m, |w| w.len());

    struct Ctx<'a> {
        tiling: &'a [[Cell; 2]],
        order: &'a [usize],
        owner: &'a BTreeMap<Cell, usize>,
        weight: Option<&'a [usize]>,
        max_label: usize,
    }

    /// Label order against already labelled neighbouring dominoes.
    fn fits(ctx: &Ctx, labels: &[usize], i: usize, v: usize) -> bool {
        let other = |nb: Option<Cell>| -> Option<usize> {
            let j = *ctx.owner.get(&nb?)?;
            (j != i && labels[j] != 0).then(|| labels[j])
        };
        ctx.tiling[i].iter().all(|&c| {
            other(Some(c.right())).is_none_or(|l| v <= l)
                && other(Some(c.below())).is_none_or(|l| v < l)
                && other(c.left()).is_none_or(|l| l <= v)
                && other(c.above()).is_none_or(|l| l < v)
        })
    }

    fn rec(ctx: &Ctx, pos: usize, labels: &mut Vec<usize>, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == ctx.order.len() {
            out.push(labels.clone());
            return;
        }
        let i = ctx.order[pos];
        for v in 1..=ctx.max_label {
            if v > 1 && counts[v - 1] >= counts[v - 2] {
                continue;
            }
            if let Some(w) = ctx.weight {
                if counts[v - 1] >= w[v - 1] {
                    continue;
                }
            }
            if !fits(ctx, labels, i, v) {
                continue;
            }
            labels[i] = v;
            counts[v - 1] += 1;
            rec(ctx, pos + 1, labels, counts, out);
            counts[v - 1] -= 1;
            labels[i] = 0;
        }
    }

    let ctx = Ctx { tiling, order: &order, owner: &owner, weight, max_label };
    let mut found = Vec::new();
    rec(&ctx, 0, &mut vec![0; m], &mut vec![0; max_label + 1], &mut found);
    for labels in found {
        let dominoes = tiling
            .iter()
            .zip(labels)
            .map(|(d, l)| Domino { cells: *d, label: l })
            .collect();
        out.push(DominoTableau::new_unchecked(outer.clone(), inner.clone(), dominoes));
    }
}

/// All Yamanouchi domino tableaux of straight shape `shape` and weight `weight`.
pub fn enumerate_ydt(shape: &Partition, weight: &Partition) -> Result<Vec<DominoTableau>> {
    if shape.size() != 2 * weight.size() {
        return Err(Error::SizeMismatch { expected: 2 * weight.size(), actual: shape.size() });
    }
    let mut out = Vec::new();
    for tiling in enumerate_tilings(shape, &Partition::empty()) {
        yamanouchi_labellings(shape, &Partition::empty(), &tiling, Some(weight.parts()), &mut out);
    }
    out.sort();
    Ok(out)
}

/// Every Yamanouchi domino tableau of straight shape `shape`, grouped by weight.
pub fn enumerate_ydt_all(shape: &Partition) -> BTreeMap<Partition, Vec<DominoTableau>> {
    let mut all = Vec::new();
    for tiling in enumerate_tilings(shape, &Partition::empty()) {
        yamanouchi_labellings(shape, &Partition::empty(), &tiling, None, &mut all);
    }
    let mut grouped: BTreeMap<Partition, Vec<DominoTableau>> = BTreeMap::new();
    for d in all {
        let wt = Partition::new(d.weight()).expect("Yamanouchi weights are partitions");
        grouped.entry(wt).or_default().push(d);
    }
    for v in grouped.values_mut() {
        v.sort();
    }
    grouped
}

/// Number of `D` in `YDT(λ^□, μ)` with `spin(D) ≡ |λ| (mod 2)`.
pub fn cl_coefficient(lambda: &Partition, mu: &Partition) -> Result<usize> {
    if mu.size() != 2 * lambda.size() {
        return Err(Error::SizeMismatch { expected: 2 * lambda.size(), actual: mu.size() });
    }
    let n = lambda.size() as i64;
    Ok(enumerate_ydt(&doubled_square(lambda), mu)?
        .iter()
        .filter(|d| {
            let s = d.spin();
            s.is_integer() && (s.to_integer() - n).rem_euclid(2) == 0
        })
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn v(r: usize, c: usize, l: usize) -> Domino {
        Domino::vertical(Cell::new(r, c), l)
    }

    fn h(r: usize, c: usize, l: usize) -> Domino {
        Domino::horizontal(Cell::new(r, c), l)
    }

    /// The final tableau of the worked four-step example on shape (6,6,4,4).
    fn final_frame() -> DominoTableau {
        DominoTableau::new(
            part("6,6,4,4"),
            Partition::empty(),
            vec![
                v(1, 1, 1),
                v(1, 2, 1),
                v(1, 3, 1),
                v(1, 4, 1),
                h(1, 5, 1),
                v(3, 1, 2),
                h(3, 2, 2),
                h(2, 5, 2),
                h(4, 2, 3),
                v(3, 4, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(final_frame().validate());
        let bad = DominoTableau::new_unchecked(part("2,2"), Partition::empty(), vec![h(1, 1, 1), h(2, 1, 1)]);
        assert!(!bad.validate());
        assert!(DominoTableau::empty().validate());
        let gap = DominoTableau::new_unchecked(part("2,2"), Partition::empty(), vec![h(1, 1, 1)]);
        assert!(!gap.validate());
        assert!(Domino::new(Cell::new(1, 1), Cell::new(2, 2), 1).is_err());
    }

    #[test]
    fn reading_word_and_statistics() {
        let two_vertical = DominoTableau::new(part("2,2"), Partition::empty(), vec![v(1, 1, 1), v(1, 2, 1)]).unwrap();
        assert_eq!(two_vertical.column_reading_word(), vec![1, 1]);
        assert_eq!(two_vertical.spin(), Rational64::from_integer(1));
        let single = DominoTableau::new(part("2"), Partition::empty(), vec![h(1, 1, 1)]).unwrap();
        assert_eq!(single.column_reading_word(), vec![1]);
        assert_eq!(single.spin(), Rational64::from_integer(0));
        let f = final_frame();
        assert_eq!(f.spin(), Rational64::from_integer(3));
        assert_eq!(f.h_count() + f.v_count(), 10);
        assert!(f.is_yamanouchi());
        assert_eq!(f.weight(), vec![5, 3, 2]);
    }

    #[test]
    fn tiny_enumerations() {
        let a = enumerate_ydt(&part("2,2"), &part("2")).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].v_count(), 2);
        let b = enumerate_ydt(&part("2,2"), &part("1,1")).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].h_count(), 2);
        assert!(enumerate_ydt(&part("2,2"), &part("3")).is_err());
        assert!(enumerate_ydt(&part("6,6,4,4"), &part("5,3,2")).unwrap().contains(&final_frame()));
    }

    #[test]
    fn enumeration_is_valid_and_complete() {
        for shape in ["4,4", "4,2", "3,3,2", "2,2,2,2", "6,6,4,4"] {
            let shape = part(shape);
            let grouped = enumerate_ydt_all(&shape);
            for (wt, ds) in &grouped {
                assert_eq!(enumerate_ydt(&shape, wt).unwrap(), *ds);
                for d in ds {
                    assert!(d.validate(), "{d}");
                    assert!(d.is_yamanouchi());
                }
            }
        }
    }

    #[test]
    fn tilings_count() {
        assert_eq!(enumerate_tilings(&part("2,2"), &Partition::empty()).len(), 2);
        assert_eq!(enumerate_tilings(&part("4,4"), &Partition::empty()).len(), 5);
        assert_eq!(enumerate_tilings(&part("3"), &Partition::empty()).len(), 0);
        assert_eq!(enumerate_tilings(&part("3,3,3,3"), &Partition::empty()).len(), 11);
    }

    #[test]
    fn cl_coefficients_small() {
        assert_eq!(cl_coefficient(&part("1"), &part("2")).unwrap(), 1);
        assert_eq!(cl_coefficient(&part("1"), &part("1,1")).unwrap(), 0);
        assert_eq!(cl_coefficient(&part("1,1"), &part("2,2")).unwrap(), 1);
        assert!(cl_coefficient(&part("3,2"), &part("5,3,2")).unwrap() >= 1);
    }

    #[test]
    fn json_round_trip() {
        let f = final_frame();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"cells\":[[1,1],[2,1]]"));
        let back: DominoTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let broken = json.replace("[[1,1],[2,1]]", "[[1,1],[2,2]]");
        assert!(serde_json::from_str::<DominoTableau>(&broken).is_err());
    }

    #[test]
    fn ascii_rendering() {
        let d = DominoTableau::new(part("2,2"), Partition::empty(), vec![h(1, 1, 1), h(2, 1, 2)]).unwrap();
        assert_eq!(d.render_ascii(), "+--+--+\n| 1   |\n+--+--+\n| 2   |\n+--+--+");
        let d = DominoTableau::new(part("2,2"), Partition::empty(), vec![v(1, 1, 1), v(1, 2, 1)]).unwrap();
        assert_eq!(d.render_ascii(), "+--+--+\n| 1| 1|\n+  +  +\n|  |  |\n+--+--+");
    }
}
