//! Jeu de taquin slides, rectification, `T^I`, and tableau switching.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Interval, SkewShape};
use crate::tableau::{StandardTableau, Tableau};

/// One elementary move: the entry at `from` moved into the empty cell `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub to: Cell,
    pub from: Cell,
    pub entry: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell {} <- {} entry {}", self.to, self.from, self.entry)
    }
}

/// The neighbour that slides into the empty cell `hole`: the smaller of the
/// entries below and to the right, the lower one on a tie.
fn slide_source(t: &Tableau, hole: Cell) -> Option<Cell> {
    let below = hole.below();
    let right = hole.right();
    match (t.get(below), t.get(right)) {
        (None, None) => None,
        (Some(_), None) => Some(below),
        (None, Some(_)) => Some(right),
        (Some(b), Some(r)) => Some(if b <= r { below } else { right }),
    }
}

/// Inner corners of the skew shape of `t`, in row-major order.
pub fn inner_corners(t: &Tableau) -> Result<Vec<Cell>> {
    let shape = t.skew_shape().ok_or(Error::NotSkew)?;
    Ok(shape.inner.corners())
}

/// The slide into the inner corner `hole`, with its elementary moves.
pub fn jdt_slide_traced(t: &Tableau, hole: Cell) -> Result<(Tableau, Vec<Move>)> {
    if !inner_corners(t)?.contains(&hole) {
        return Err(Error::NoSlide { row: hole.row, col: hole.col });
    }
    let mut entries = t.entries().clone();
    let mut moves = Vec::new();
    let mut hole = hole;
    while let Some(src) = slide_source(&Tableau::from_map_unchecked(entries.clone()), hole) {
        let e = entries.remove(&src).expect("source cell is occupied");
        entries.insert(hole, e);
        moves.push(Move { to: hole, from: src, entry: e });
        hole = src;
    }
    Ok((Tableau::from_map_unchecked(entries), moves))
}

/// A jeu de taquin slide into the inner corner `hole`.
pub fn jdt_slide(t: &Tableau, hole: Cell) -> Result<Tableau> {
    jdt_slide_traced(t, hole).map(|(r, _)| r)
}

/// Rectifies by sliding into the bottom-most inner corner each time.
pub fn rectify(t: &Tableau) -> Result<Tableau> {
    rectify_traced(t).map(|(r, _)| r)
}

/// [`rectify`] together with the sequence of moves performed.
pub fn rectify_traced(t: &Tableau) -> Result<(Tableau, Vec<Move>)> {
    rectify_with(t, |corners| corners.len() - 1)
}

/// Rectification where `choose` picks the next inner corner to slide into.
pub fn rectify_with(
    t: &Tableau,
    mut choose: impl FnMut(&[Cell]) -> usize,
) -> Result<(Tableau, Vec<Move>)> {
    if !t.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    let mut cur = t.clone();
    let mut moves = Vec::new();
    loop {
        let corners = inner_corners(&cur)?;
        if corners.is_empty() {
            break;
        }
        let (next, slide) = jdt_slide_traced(&cur, corners[choose(&corners)])?;
        cur = next;
        moves.extend(slide);
    }
    Ok((cur, moves))
}

/// `T^I = rect(st(T_I))`.
pub fn restricted_rectify(t: &StandardTableau, interval: Interval) -> Result<StandardTableau> {
    let part = t.restrict(interval)?.standardize()?;
    let rect = rectify(&part)?;
    Ok(StandardTableau::new_unchecked(rect))
}

/// Checks that `inner` and `outer` occupy nested skew shapes `λ/ν` and `μ/λ`.
fn check_nested(inner: &Tableau, outer: &Tableau) -> Result<()> {
    let inner_cells = inner.cells();
    let outer_cells = outer.cells();
    if !inner_cells.is_disjoint(&outer_cells) {
        return Err(Error::NotNested);
    }
    let all: BTreeSet<Cell> = inner_cells.union(&outer_cells).copied().collect();
    let whole = SkewShape::from_cells(&all).ok_or(Error::NotNested)?;
    let mut lambda: BTreeSet<Cell> = whole.inner.cells().collect();
    lambda.extend(inner_cells.iter().copied());
    match SkewShape::from_cells(&lambda) {
        Some(s) if s.is_straight() => Ok(()),
        _ => Err(Error::NotNested),
    }
}

/// Switches the nested pair `(S, T)` with `S` inside `T`, returning `(T', S')`
/// where `T'` now lies inside `S'`.
pub fn tableau_switch(s: &Tableau, t: &Tableau) -> Result<(Tableau, Tableau)> {
    tableau_switch_traced(s, t).map(|(a, b, _)| (a, b))
}

/// [`tableau_switch`] together with the moves of `T`-entries into `S`-cells.
pub fn tableau_switch_traced(s: &Tableau, t: &Tableau) -> Result<(Tableau, Tableau, Vec<Move>)> {
    if !s.is_column_strict() || !t.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    check_nested(s, t)?;
    let mut s_map: BTreeMap<Cell, usize> = s.entries().clone();
    let mut t_map: BTreeMap<Cell, usize> = t.entries().clone();
    let mut moves = Vec::new();
    'outer: loop {
        for (&sc, &x) in s_map.iter() {
            for tc in [sc.below(), sc.right()] {
                let Some(&y) = t_map.get(&tc) else { continue };
                let mut t_next = t_map.clone();
                t_next.remove(&tc);
                t_next.insert(sc, y);
                let t_next = Tableau::from_map_unchecked(t_next);
                if !t_next.consistent_at(sc) {
                    continue;
                }
                let mut s_next = s_map.clone();
                s_next.remove(&sc);
                s_next.insert(tc, x);
                let s_next = Tableau::from_map_unchecked(s_next);
                if !s_next.consistent_at(tc) {
                    continue;
                }
                moves.push(Move { to: sc, from: tc, entry: y });
                s_map = s_next.into_entries();
                t_map = t_next.into_entries();
                continue 'outer;
            }
        }
        break;
    }
    Ok((Tableau::from_map_unchecked(t_map), Tableau::from_map_unchecked(s_map), moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;
    use crate::tableau::{canonical_one, canonical_row_filling};

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn example_s() -> Tableau {
        tab(". . . 2 4/. . 5/1 3")
    }

    #[test]
    fn single_slides() {
        let t = Tableau::from_cells([(Cell::new(1, 2), 1), (Cell::new(3, 1), 2)]).unwrap();
        let t = jdt_slide(&t, Cell::new(2, 1)).unwrap();
        let t = jdt_slide(&t, Cell::new(1, 1)).unwrap();
        assert_eq!(t.get(Cell::new(1, 1)), Some(1));
        assert_eq!(t.get(Cell::new(1, 2)), None);
        assert_eq!(t.get(Cell::new(2, 1)), Some(2));
        let t = tab(". 1");
        assert_eq!(jdt_slide(&t, Cell::new(1, 1)).unwrap(), tab("1"));
        assert_eq!(jdt_slide(&t, Cell::new(2, 2)), Err(Error::NoSlide { row: 2, col: 2 }));
        let (_, moves) = jdt_slide_traced(&tab(". 1 3/2 4"), Cell::new(1, 1)).unwrap();
        assert_eq!(moves.len(), 2);
    }

    #[test]
    fn slide_moves_smaller_neighbour() {
        let t = tab(". 1/2");
        assert_eq!(jdt_slide(&t, Cell::new(1, 1)).unwrap(), tab("1/2"));
        let t = tab(". 2/1");
        assert_eq!(jdt_slide(&t, Cell::new(1, 1)).unwrap(), tab("1 2"));
        let t = tab(". 1/1");
        assert_eq!(jdt_slide(&t, Cell::new(1, 1)).unwrap(), tab("1 1"));
    }

    #[test]
    fn rectify_examples() {
        assert_eq!(rectify(&example_s()).unwrap(), tab("1 2 4/3 5"));
        let t = tab("1 2 4/3 5");
        assert_eq!(rectify(&t).unwrap(), t);
        assert_eq!(rectify(&tab(". . ./. . 1")).unwrap(), tab("1"));
        assert_eq!(rectify(&Tableau::empty()).unwrap(), Tableau::empty());
    }

    #[test]
    fn trace_format() {
        let (_, moves) = rectify_traced(&tab(". 1")).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].to_string(), "cell (1,1) <- (1,2) entry 1");
    }

    #[test]
    fn restricted_rectify_examples() {
        let t = StandardTableau::from_rows(&[&[1, 2, 4, 7, 9], &[3, 5, 10], &[6, 8]]).unwrap();
        let u = restricted_rectify(&t, Interval::new(6, 10)).unwrap();
        assert_eq!(u, StandardTableau::from_rows(&[&[1, 2, 4], &[3, 5]]).unwrap());
        let prefix = restricted_rectify(&t, Interval::prefix(5)).unwrap();
        assert_eq!(*prefix.as_tableau(), t.restrict(Interval::prefix(5)).unwrap());
        let t8 = StandardTableau::from_rows(&[&[1, 3], &[2, 6], &[4], &[5]]).unwrap();
        let hi = restricted_rectify(&t8, Interval::new(4, 6)).unwrap();
        assert_eq!(hi, StandardTableau::from_rows(&[&[1, 3], &[2]]).unwrap());
        assert_eq!(*hi.as_tableau(), t8.restrict(Interval::prefix(3)).unwrap());
    }

    #[test]
    fn switch_figure_example() {
        let s = tab("1 2 3/4 5");
        let t = tab(". . . 2 4/. . 5/1 3");
        let (t2, s2) = tableau_switch(&s, &t).unwrap();
        assert_eq!(t2, tab("1 2 4/3 5"));
        assert_eq!(s2, tab(". . . 2 3/. . 1/4 5"));
        let (back_s, back_t) = tableau_switch(&t2, &s2).unwrap();
        assert_eq!((back_s, back_t), (s, t));
    }

    #[test]
    fn switch_with_canonical_tableaux() {
        let lambda: Partition = "3,2".parse().unwrap();
        let (a, b) = tableau_switch(&canonical_row_filling(&lambda), &example_s()).unwrap();
        assert_eq!(a, tab("1 2 4/3 5"));
        assert_eq!(b, tab(". . . 2 3/. . 1/4 5"));
        let (c, d) = tableau_switch(&canonical_one(&lambda), &b).unwrap();
        assert_eq!(c, *canonical_row_filling(&lambda).as_tableau());
        assert_eq!(d, tab(". . . 1 1/. . 2/1 2"));
    }

    #[test]
    fn switch_rejects_non_nested() {
        let s = tab(". 1");
        let t = tab("1");
        assert_eq!(tableau_switch(&s, &t), Err(Error::NotNested));
        assert_eq!(tableau_switch(&tab("1"), &tab("1")), Err(Error::NotNested));
    }

    #[test]
    fn switch_with_straight_inner_rectifies_outer() {
        let s = tab("1 2/3");
        let t = tab(". . 1/. 2/1");
        let (t2, s2) = tableau_switch(&s, &t).unwrap();
        assert_eq!(t2, rectify(&t).unwrap());
        assert_eq!(rectify(&s2).unwrap(), s);
    }
}
