//! The chain of bijections from `SYT^=(2n)` to pairs (standard tableau,
//! Yamanouchi domino tableau) that defines the spin of a standard tableau:
//! LR tableaux via tableau switching, the two-component tableau on `λ*λ`,
//! the staircase domino tableau and the shrinking map on staircases.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use serde::Serialize;

use crate::domino::{Domino, DominoTableau};
use crate::error::{Error, Result};
use crate::jdt::{rectify, restricted_rectify, tableau_switch_traced, Move};
use crate::shapes::{blocks, staircase, star, Cell, Interval, Partition, SkewShape};
use crate::tableau::{canonical_one, canonical_row_filling, is_lr_tableau, StandardTableau, Tableau};

/// Intermediate tableaux of `Ψ_U(S)`: `X(Q_λ, S) = (A, B)` and `X(1_λ, B) = (C, D)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiTrace {
    pub a: Tableau,
    pub b: Tableau,
    pub c: Tableau,
    pub d: Tableau,
    pub first_moves: Vec<Move>,
    pub second_moves: Vec<Move>,
}

/// Maps `S` with `rect(S) = U` to an LR tableau of weight `sh(U)`.
pub fn psi(u: &StandardTableau, s: &Tableau) -> Result<Tableau> {
    psi_traced(u, s).map(|t| t.d)
}

pub fn psi_traced(u: &StandardTableau, s: &Tableau) -> Result<PsiTrace> {
    let lambda = u
        .straight_shape()
        .ok_or_else(|| Error::Precondition("U must have straight shape".into()))?;
    if rectify(s)? != *u.as_tableau() {
        return Err(Error::Precondition("S does not rectify to U".into()));
    }
    let (a, b, first_moves) = tableau_switch_traced(canonical_row_filling(&lambda).as_tableau(), s)?;
    let (c, d, second_moves) = tableau_switch_traced(&canonical_one(&lambda), &b)?;
    Ok(PsiTrace { a, b, c, d, first_moves, second_moves })
}

/// Checks that `l` is an LR tableau of shape `μ/λ` and weight `λ`; returns `λ`.
fn lr_inner_weight(l: &Tableau) -> Result<Partition> {
    let lambda = Partition::new(l.weight())
        .map_err(|_| Error::Precondition("weight is not a partition".into()))?;
    let mut counts = vec![0; l.max_row().max(lambda.len())];
    for (c, _) in l.iter() {
        counts[c.row - 1] += 1;
    }
    for (c, _) in l.iter() {
        let lo = lambda.part(c.row);
        if c.col <= lo || c.col > lo + counts[c.row - 1] {
            return Err(Error::Precondition(format!("cell {c} does not fit μ/λ with λ = {lambda}")));
        }
    }
    let mu: Vec<usize> = (0..counts.len()).map(|r| lambda.part(r + 1) + counts[r]).collect();
    Partition::new(mu).map_err(|_| Error::Precondition("outer shape is not a partition".into()))?;
    if !is_lr_tableau(l, &lambda) {
        return Err(Error::Precondition("not a Littlewood-Richardson tableau".into()));
    }
    Ok(lambda)
}

/// Sends `L ∈ LR(μ/λ, λ)` to the tableau on `λ*λ` whose upper-right component
/// is `1_λ` and whose lower-left row `k` lists, in order, `l` once for every
/// entry `k` in row `l` of `L`.
pub fn omega(l: &Tableau) -> Result<Tableau> {
    let lambda = lr_inner_weight(l)?;
    let rows = lambda.len();
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for (c, e) in l.iter() {
        by_row[e - 1].push(c.row);
    }
    let width = lambda.first();
    let mut entries = BTreeMap::new();
    for (k, row) in by_row.iter_mut().enumerate() {
        row.sort_unstable();
        for (j, &v) in row.iter().enumerate() {
            entries.insert(Cell::new(rows + k + 1, j + 1), v);
        }
    }
    for c in lambda.cells() {
        entries.insert(Cell::new(c.row, c.col + width), c.row);
    }
    Tableau::new(entries)
}

/// Splits a tableau on `λ*λ` into `λ` and its lower-left and upper-right
/// components, both in their own coordinates.
fn split_star(m: &Tableau) -> Result<(Partition, Tableau, Tableau)> {
    if m.is_empty() {
        return Ok((Partition::empty(), Tableau::empty(), Tableau::empty()));
    }
    let first_low = m
        .iter()
        .filter(|(c, _)| c.col == 1)
        .map(|(c, _)| c.row)
        .min()
        .ok_or_else(|| Error::Precondition("no lower-left component".into()))?;
    let upper_rows = first_low - 1;
    let mut lengths = vec![0; m.max_row() - upper_rows];
    for (c, _) in m.iter().filter(|(c, _)| c.row > upper_rows) {
        lengths[c.row - upper_rows - 1] += 1;
    }
    let lambda = Partition::new(lengths)
        .map_err(|_| Error::Precondition("lower-left component is not a straight shape".into()))?;
    if lambda.len() != upper_rows {
        return Err(Error::Precondition("shape is not of the form λ*λ".into()));
    }
    let expected: BTreeSet<Cell> = star(&lambda, &lambda).cells().collect();
    if m.cells() != expected {
        return Err(Error::Precondition(format!("shape is not {lambda} * {lambda}")));
    }
    let width = lambda.first();
    let lower = Tableau::from_cells(
        m.iter().filter(|(c, _)| c.row > upper_rows).map(|(c, e)| (Cell::new(c.row - upper_rows, c.col), e)),
    )?;
    let upper = Tableau::from_cells(
        m.iter().filter(|(c, _)| c.row <= upper_rows).map(|(c, e)| (Cell::new(c.row, c.col - width), e)),
    )?;
    Ok((lambda, lower, upper))
}

/// The domino tableau with inner staircase `δ_k`, `k = λ_1 + ℓ(λ)`, obtained
/// by turning lower-left cells into vertical dominoes and upper-right cells
/// into horizontal dominoes along the staircase diagonals.
pub fn d_of(m: &Tableau) -> Result<DominoTableau> {
    let (lambda, lower, upper) = split_star(m)?;
    if lambda.is_empty() {
        return Ok(DominoTableau::empty());
    }
    let k = lambda.first() + lambda.len();
    let mut dominoes = Vec::with_capacity(lower.len() + upper.len());
    for (c, a) in lower.iter() {
        let top = k + 2 * c.row - c.col - 1;
        dominoes.push(Domino::vertical(Cell::new(top, c.col), a));
    }
    for (c, a) in upper.iter() {
        let left = k + 2 * c.col - c.row - 1;
        dominoes.push(Domino::horizontal(Cell::new(c.row, left), a));
    }
    assemble(staircase(k), dominoes)
}

/// Builds a domino tableau over `inner`, with the outer shape read off the cells.
fn assemble(inner: Partition, dominoes: Vec<Domino>) -> Result<DominoTableau> {
    let mut cells: BTreeSet<Cell> = inner.cells().collect();
    for d in &dominoes {
        for &c in &d.cells {
            if !cells.insert(c) {
                return Err(Error::InvalidDomino(format!("cell {c} covered twice")));
            }
        }
    }
    let outer = match SkewShape::from_cells(&cells) {
        Some(s) if s.is_straight() => s.outer,
        _ => return Err(Error::InvalidDomino("cells do not form a partition".into())),
    };
    DominoTableau::new(outer, inner, dominoes)
}

/// An arrow from a cell of a domino to a target cell on the active diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Arrow {
    pub from: Cell,
    pub to: Cell,
}

/// A maximal sequence of dominoes linked by arrows, listed from the domino
/// whose arrow leaves the chain. A chain is open when that arrow points out of
/// the domino region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub dominoes: Vec<Domino>,
    pub open: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowDiagram {
    pub arrows: Vec<Arrow>,
    pub chains: Vec<Chain>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Domino(usize),
    Exit,
}

/// Staircase index `k` with `inner = δ_k`, for `k >= 2`.
fn staircase_index(inner: &Partition) -> Result<usize> {
    let k = inner.len() + 1;
    if k < 2 {
        return Err(Error::StaircaseTooSmall);
    }
    if *inner != staircase(k) {
        return Err(Error::InvalidDomino(format!("inner shape {inner} is not a staircase")));
    }
    Ok(k)
}

struct Arrows {
    list: Vec<(usize, Arrow)>,
    out: Vec<Option<(Arrow, Target)>>,
}

fn compute_arrows(d: &DominoTableau) -> Result<Arrows> {
    let k = staircase_index(&d.inner)?;
    let alpha = &d.outer;
    let delta = &d.inner;
    let owner = d.cell_index();
    let in_alpha = |c: Cell| c.row >= 1 && c.col >= 1 && alpha.contains_cell(c);
    let corners: BTreeSet<Cell> = delta.corners().into_iter().collect();
    let addable = |c: Cell| {
        !alpha.contains_cell(c)
            && alpha.part(c.row) + 1 == c.col
            && (c.row == 1 || alpha.part(c.row - 1) >= c.col)
    };

    let mut list = Vec::new();
    for i in 1..=alpha.len() + 1 {
        for j in 1..=alpha.first() + 1 {
            if (j as isize - i as isize - k as isize).rem_euclid(2) != 0 {
                continue;
            }
            let c = Cell::new(i, j);
            if !(owner.contains_key(&c) || corners.contains(&c) || addable(c)) {
                continue;
            }
            let own = owner.get(&c).copied();
            // the domino of a neighbour, unless it is the domino of `c`
            let dom = |x: Option<Cell>| -> Option<usize> {
                let i = *owner.get(&x?)?;
                (Some(i) != own).then_some(i)
            };
            let outside = |x: Option<Cell>| x.is_none_or(|x| !in_alpha(x));
            let (north, west) = (c.above(), c.left());
            let (south, east) = (Some(c.below()), Some(c.right()));
            let label = |i: usize| d.dominoes()[i].label;

            let from = match (dom(north), dom(west)) {
                (Some(a), Some(b)) => Some(if label(a) >= label(b) { north } else { west }),
                (Some(_), None) if outside(west) => Some(north),
                (None, Some(_)) if outside(north) => Some(west),
                _ => match (dom(south), dom(east)) {
                    (Some(a), Some(b)) => Some(if label(a) <= label(b) { south } else { east }),
                    (Some(_), None) if outside(east) => Some(south),
                    (None, Some(_)) if outside(south) => Some(east),
                    _ => None,
                },
            };
            if let Some(from) = from.flatten() {
                list.push((owner[&from], Arrow { from, to: c }));
            }
        }
    }

    let mut out: Vec<Option<(Arrow, Target)>> = vec![None; d.len()];
    let mut incoming: BTreeMap<usize, Cell> = BTreeMap::new();
    let mut targets: BTreeSet<Cell> = BTreeSet::new();
    for &(src, arrow) in &list {
        let ambiguous = |c: Cell| Error::AmbiguousArrow { row: c.row, col: c.col };
        if !targets.insert(arrow.to) {
            return Err(ambiguous(arrow.to));
        }
        if out[src].is_some() {
            return Err(ambiguous(arrow.from));
        }
        let target = match owner.get(&arrow.to) {
            Some(&j) => {
                if incoming.insert(j, arrow.to).is_some() {
                    return Err(ambiguous(arrow.to));
                }
                Target::Domino(j)
            }
            None => Target::Exit,
        };
        out[src] = Some((arrow, target));
    }
    Ok(Arrows { list, out })
}

fn open_flags(out: &[Option<(Arrow, Target)>]) -> Vec<bool> {
    let n = out.len();
    let mut open = vec![false; n];
    for (start, flag) in open.iter_mut().enumerate() {
        let mut cur = start;
        let mut steps = 0;
        *flag = loop {
            match out[cur] {
                None => break false,
                Some((_, Target::Exit)) => break true,
                Some((_, Target::Domino(j))) => {
                    cur = j;
                    steps += 1;
                    if steps > n {
                        break false;
                    }
                }
            }
        };
    }
    open
}

/// Arrows and chains of a domino tableau with inner staircase `δ_k`, `k >= 2`.
pub fn arrow_diagram(d: &DominoTableau) -> Result<ArrowDiagram> {
    let arrows = compute_arrows(d)?;
    let open = open_flags(&arrows.out);
    let n = d.len();
    let mut has_in = vec![false; n];
    for (_, t) in arrows.out.iter().flatten() {
        if let Target::Domino(j) = t {
            has_in[*j] = true;
        }
    }
    let linked: Vec<bool> = (0..n).map(|i| arrows.out[i].is_some() || has_in[i]).collect();
    let mut seen = vec![false; n];
    let mut chains = Vec::new();
    let walk = |start: usize, seen: &mut Vec<bool>| {
        let mut path = Vec::new();
        let mut cur = Some(start);
        while let Some(i) = cur {
            if seen[i] {
                break;
            }
            seen[i] = true;
            path.push(i);
            cur = match arrows.out[i] {
                Some((_, Target::Domino(j))) => Some(j),
                _ => None,
            };
        }
        path.reverse();
        Chain { open: open[start], dominoes: path.into_iter().map(|i| d.dominoes()[i]).collect() }
    };
    for start in 0..n {
        if linked[start] && !has_in[start] && !seen[start] {
            chains.push(walk(start, &mut seen));
        }
    }
    for start in 0..n {
        if linked[start] && !seen[start] {
            chains.push(walk(start, &mut seen));
        }
    }
    let mut list: Vec<Arrow> = arrows.list.iter().map(|&(_, a)| a).collect();
    list.sort();
    Ok(ArrowDiagram { arrows: list, chains })
}

/// Moves every domino of every open chain one step along its arrow; the inner
/// staircase shrinks from `δ_k` to `δ_{k-1}`.
pub fn theta(d: &DominoTableau) -> Result<DominoTableau> {
    let k = staircase_index(&d.inner)?;
    let arrows = compute_arrows(d)?;
    let open = open_flags(&arrows.out);
    let dominoes = d
        .dominoes()
        .iter()
        .enumerate()
        .map(|(i, dom)| match arrows.out[i] {
            Some((arrow, _)) if open[i] => Domino::new(arrow.from, arrow.to, dom.label),
            _ => Ok(*dom),
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(staircase(k - 1), dominoes)
}

/// One application of `theta` together with the arrow diagram it used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaStep {
    pub diagram: ArrowDiagram,
    pub result: DominoTableau,
}

/// `Φ₀(M) = θ^{k-1}(d(M))`.
pub fn phi0(m: &Tableau) -> Result<DominoTableau> {
    let (_, steps) = phi0_traced(m)?;
    Ok(steps.last().map(|s| s.result.clone()).unwrap_or_else(DominoTableau::empty))
}

/// `d(M)` and the successive applications of `theta`.
pub fn phi0_traced(m: &Tableau) -> Result<(DominoTableau, Vec<ThetaStep>)> {
    let start = d_of(m)?;
    let mut steps = Vec::new();
    let mut cur = start.clone();
    while !cur.inner.is_empty() {
        let diagram = arrow_diagram(&cur)?;
        let result = theta(&cur)?;
        steps.push(ThetaStep { diagram, result: result.clone() });
        cur = result;
    }
    Ok((start, steps))
}

/// `n` for a tableau with `2n` cells.
fn half_size(t: &StandardTableau) -> Result<usize> {
    if !t.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!("tableau has odd size {}", t.len())));
    }
    Ok(t.len() / 2)
}

/// Whether `T_{[n]}` equals `T^{[n+1,2n]}` for a tableau with `2n` cells.
pub fn halves_agree(t: &StandardTableau) -> Result<bool> {
    let n = half_size(t)?;
    let low = t.restrict(Interval::prefix(n))?;
    let high = restricted_rectify(t, Interval::new(n + 1, 2 * n))?;
    Ok(low == *high.as_tableau())
}

/// `ϑ(T) = (T_{[n]}, st(T_{[n+1,2n]}))` on tableaux with `T_{[n]} = T^{[n+1,2n]}`.
pub fn vartheta(t: &StandardTableau) -> Result<(StandardTableau, Tableau)> {
    let n = half_size(t)?;
    if !halves_agree(t)? {
        return Err(Error::Precondition("lower half differs from rectified upper half".into()));
    }
    let u = StandardTableau::try_from(t.restrict(Interval::prefix(n))?)?;
    let s = t.restrict(Interval::new(n + 1, 2 * n))?.map_entries(|e| e - n);
    Ok((u, s))
}

/// Every intermediate object of `ξ(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiTrace {
    pub u: StandardTableau,
    pub s: Tableau,
    pub psi: PsiTrace,
    pub omega: Tableau,
    pub d: DominoTableau,
    pub theta: Vec<ThetaStep>,
    pub result: DominoTableau,
}

impl XiTrace {
    pub fn spin(&self) -> Rational64 {
        self.result.spin()
    }
}

pub fn xi_traced(t: &StandardTableau) -> Result<XiTrace> {
    let (u, s) = vartheta(t)?;
    let psi = psi_traced(&u, &s)?;
    let omega = omega(&psi.d)?;
    let (d, theta) = phi0_traced(&omega)?;
    let result = theta.last().map(|s| s.result.clone()).unwrap_or_else(DominoTableau::empty);
    Ok(XiTrace { u, s, psi, omega, d, theta, result })
}

/// `ξ(T) = (U, Φ₀(Ω(Ψ_U(S))))` where `ϑ(T) = (U, S)`.
pub fn xi(t: &StandardTableau) -> Result<(StandardTableau, DominoTableau)> {
    xi_traced(t).map(|tr| (tr.u, tr.result))
}

/// The spin of a tableau with `T_{[n]} = T^{[n+1,2n]}`.
pub fn spin_of_syt(t: &StandardTableau) -> Result<Rational64> {
    xi(t).map(|(_, d)| d.spin())
}

/// Both block-major indices with respect to `(n,n)` are `≡ 1 (mod n)`.
fn in_two_row_class(t: &StandardTableau, n: usize) -> bool {
    let lambda = Partition::new(vec![n, n]).expect("valid partition");
    debug_assert_eq!(blocks(&lambda).len(), 2);
    (1..=2).all(|i| t.block_maj(&lambda, i) % n == 1 % n)
}

/// The involution pairing tableaux whose lower half differs from the
/// rectified upper half: the halves are exchanged by tableau switching.
pub fn iota(t: &StandardTableau) -> Result<StandardTableau> {
    let n = half_size(t)?;
    if n == 0 || !in_two_row_class(t, n) || halves_agree(t)? {
        return Err(Error::Precondition("tableau is not in the unequal two-block class".into()));
    }
    let low = t.restrict(Interval::prefix(n))?;
    let high = t.restrict(Interval::new(n + 1, 2 * n))?.map_entries(|e| e - n);
    let (s_prime, u_prime, _) = tableau_switch_traced(&low, &high)?;
    let swapped = s_prime.union(&u_prime.map_entries(|e| e + n))?;
    StandardTableau::try_from(swapped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn syt(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn psi_example() {
        let u = syt("1 2 4/3 5");
        let s = tab(". . . 2 4/. . 5/1 3");
        let tr = psi_traced(&u, &s).unwrap();
        assert_eq!(tr.a, tab("1 2 4/3 5"));
        assert_eq!(tr.b, tab(". . . 2 3/. . 1/4 5"));
        assert_eq!(tr.d, tab(". . . 1 1/. . 2/1 2"));
        assert!(psi(&syt("1 2 3/4 5"), &s).is_err());
        assert_eq!(psi(&StandardTableau::from_rows(&[]).unwrap(), &Tableau::empty()).unwrap(), Tableau::empty());
    }

    #[test]
    fn omega_example() {
        let l = tab(". . . 1 1/. . 2/1 2");
        let o = omega(&l).unwrap();
        assert_eq!(o, tab(". . . 1 1 1/. . . 2 2/1 1 3/2 3"));
        let single = Tableau::from_cells([(Cell::new(2, 1), 1)]).unwrap();
        assert_eq!(omega(&single).unwrap(), tab(". 1/2"));
        assert!(omega(&tab(". . 2/1 1")).is_err());
    }

    #[test]
    fn d_of_examples() {
        let d = d_of(&tab(". 1/2")).unwrap();
        assert_eq!(d.inner, part("1"));
        assert!(d.dominoes().contains(&Domino::vertical(Cell::new(2, 1), 2)));
        assert!(d.dominoes().contains(&Domino::horizontal(Cell::new(1, 2), 1)));
        assert!(d.is_yamanouchi());
    }

    #[test]
    fn theta_on_empty_tiling() {
        let d = DominoTableau::new(part("2,1"), part("2,1"), vec![]).unwrap();
        let t = theta(&d).unwrap();
        assert_eq!(t.inner, part("1"));
        assert!(t.is_empty());
        assert_eq!(theta(&DominoTableau::empty()), Err(Error::StaircaseTooSmall));
    }

    #[test]
    fn vartheta_examples() {
        let (u, s) = vartheta(&syt("1 2")).unwrap();
        assert_eq!(u, syt("1"));
        assert_eq!(s, tab(". 1"));
        let (u, s) = vartheta(&syt("1/2")).unwrap();
        assert_eq!(u, syt("1"));
        assert_eq!(s, tab("./1"));
        assert!(vartheta(&syt("1 2 3")).is_err());
    }

    #[test]
    fn spin_of_small_tableaux() {
        assert_eq!(spin_of_syt(&syt("1 3 4 6/2 5")).unwrap(), Rational64::from_integer(3));
        assert_eq!(spin_of_syt(&syt("1 3/2 6/4/5")).unwrap(), Rational64::from_integer(0));
        assert_eq!(spin_of_syt(&syt("1 2")).unwrap(), Rational64::from_integer(1));
        assert_eq!(spin_of_syt(&syt("1/2")).unwrap(), Rational64::from_integer(0));
    }

    #[test]
    fn iota_rejects_equal_class() {
        assert!(iota(&syt("1 3 4 6/2 5")).is_err());
    }
}
