//! The acceptance suite: one check per criterion, shared by the `verify`
//! command and the acceptance test target.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::domino::{cl_coefficient, enumerate_ydt_all, Domino, DominoTableau};
use crate::error::Result;
use crate::jdt::{rectify, rectify_with, restricted_rectify, tableau_switch};
use crate::rsk::{rsk, subword_standardize, Permutation};
use crate::shapes::{doubled_square, enumerate_partitions, Cell, Interval, Partition, SkewShape};
use crate::symfunc::{
    h_in_p, higher_lie_character, lie_character_klyachko, lie_character_kw, multiply, p_to_schur, plethysm,
    schur_to_p, SchurExpansion, SymFunc,
};
use crate::tableau::{enumerate_syt, tableau_cmp, StandardTableau, Tableau};
use crate::thrall::{
    classify_two_row, classify_two_row_by, expansion_from_tableaux, solved_partitions, syt_lambda, TwoRowClass,
};
use crate::vanleeuwen::{halves_agree, iota, spin_of_syt, xi, xi_traced};

/// Size bounds for the checks that scan all partitions up to some `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Solved classes compared against the oracle (criterion 4).
    pub expansion: usize,
    /// `ch(L_n)` in both closed forms (criterion 5).
    pub lie: usize,
    /// Sum over all `λ ⊢ n` and the tableau-count bounds (criteria 5, 6).
    pub sum: usize,
    /// Two-column support check (criterion 5).
    pub two_column: usize,
    /// `h_2[s_λ]` against domino counts (criterion 7).
    pub carre_leclerc: usize,
    /// `ξ` and two-row decompositions (criterion 8).
    pub two_row: usize,
    /// Cells in switched pairs (criterion 8).
    pub switching: usize,
    /// Letters in the subword check (criterion 8).
    pub rsk: usize,
}

impl Limits {
    pub const FULL: Limits = Limits {
        expansion: 7,
        lie: 8,
        sum: 7,
        two_column: 4,
        carre_leclerc: 5,
        two_row: 4,
        switching: 7,
        rsk: 6,
    };

    /// The full bounds, each reduced to at most `nmax` (or the size derived from it).
    pub fn up_to(nmax: usize) -> Limits {
        let f = Limits::FULL;
        Limits {
            expansion: f.expansion.min(nmax),
            lie: f.lie.min(nmax + 1),
            sum: f.sum.min(nmax),
            two_column: f.two_column.min(nmax / 2),
            carre_leclerc: f.carre_leclerc.min(nmax.saturating_sub(1)),
            two_row: f.two_row.min(nmax / 2 + 1),
            switching: f.switching.min(nmax),
            rsk: f.rsk.min(nmax),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Wall-clock time; left out of the serialized and displayed forms so
    /// that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {}: {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail
        )
    }
}

pub const TITLES: [&str; 8] = [
    "ch(L_(4,2)) from tableaux",
    "ch(L_(3,3)) and the equal-halves tableaux",
    "golden bijection trace",
    "solved classes against the oracle",
    "oracle self-consistency",
    "tableau-count upper bound",
    "h_2[s_λ] against domino tableaux",
    "bijection and involution properties",
];

/// Runs criterion `id` (1 to 8).
pub fn run(id: u8, limits: &Limits) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => check_distinct_example(),
        2 => check_two_row_example(),
        3 => check_golden_trace(),
        4 => check_solved_classes(limits),
        5 => check_oracle(limits),
        6 => check_upper_bound(limits),
        7 => check_carre_leclerc(limits),
        8 => check_properties(limits),
        _ => panic!("no criterion {id}"),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(Ok(detail)) => (true, detail),
        Ok(Err(failure)) => (false, failure),
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome { id, title: TITLES[id as usize - 1], passed, detail, elapsed }
}

pub fn run_all(limits: &Limits) -> Vec<Outcome> {
    (1..=8).map(|id| run(id, limits)).collect()
}

/// `Ok(Ok(detail))` on success, `Ok(Err(reason))` on a mismatch.
type Check = Result<std::result::Result<String, String>>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($fmt)+)));
        }
    };
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn syt(s: &str) -> StandardTableau {
    s.parse().expect("literal tableau")
}

fn tab(s: &str) -> Tableau {
    s.parse().expect("literal tableau")
}

fn expansion(terms: &[(&str, i64)]) -> SchurExpansion {
    terms.iter().map(|&(p, c)| (part(p), c)).collect()
}

fn check_distinct_example() -> Check {
    let expected = expansion(&[
        ("4,2", 1),
        ("4,1,1", 1),
        ("3,2,1", 2),
        ("3,1,1,1", 2),
        ("2,2,2", 1),
        ("2,2,1,1", 1),
        ("2,1,1,1,1", 1),
    ]);
    let got = expansion_from_tableaux(&part("4,2"))?;
    ensure!(got == expected, "got {got}, expected {expected}");
    Ok(Ok(got.to_string()))
}

/// The tableaux with equal halves in `SYT_{(3,3)}`, with their spins.
pub const EQUAL_HALVES_33: [(&str, i64); 8] = [
    ("1 3 4 6/2 5", 3),
    ("1 3 6/2 4/5", 1),
    ("1 3 6/2/4/5", 1),
    ("1 3/2 4/5 6", 1),
    ("1 3 4 6/2/5", 2),
    ("1 3 4/2 6/5", 2),
    ("1 3 4/2 5 6", 2),
    ("1 3/2 6/4/5", 0),
];

fn check_two_row_example() -> Check {
    let lambda = part("3,3");
    let expected = expansion(&[("4,2", 1), ("3,2,1", 1), ("3,1,1,1", 1), ("2,2,2", 1)]);
    let got = expansion_from_tableaux(&lambda)?;
    ensure!(got == expected, "got {got}, expected {expected}");
    let mut equal = BTreeSet::new();
    for mu in enumerate_partitions(6) {
        for t in syt_lambda(&lambda, &mu)? {
            if classify_two_row(&t, 3)? == TwoRowClass::Equal {
                equal.insert(t);
            }
        }
    }
    let figure: BTreeSet<StandardTableau> = EQUAL_HALVES_33.iter().map(|(t, _)| syt(t)).collect();
    ensure!(equal == figure, "equal-halves tableaux differ: {} found", equal.len());
    for (t, spin) in EQUAL_HALVES_33 {
        let got = spin_of_syt(&syt(t))?;
        ensure!(got == spin.into(), "spin of {t} is {got}, expected {spin}");
    }
    Ok(Ok(format!("{got}; 8 equal-halves tableaux with spins 3,1,1,1,2,2,2,0")))
}

/// `(cells, label)` with cells as `(row, col)` pairs.
type GoldenDomino = ((usize, usize), (usize, usize), usize);

/// Arrow as `(from, to)` cells.
type GoldenArrow = ((usize, usize), (usize, usize));

/// One frame of the shrinking sequence: its dominoes and the arrows that lie on closed chains.
pub struct GoldenFrame {
    pub dominoes: &'static [GoldenDomino],
    pub arrows: &'static [GoldenArrow],
    pub closed: &'static [GoldenArrow],
}

pub const GOLDEN_TABLEAU: &str = "1 2 4 7 9/3 5 10/6 8";

pub const GOLDEN_FRAMES: [GoldenFrame; 5] = [
    GoldenFrame {
        dominoes: &[
            ((1, 5), (1, 6), 1),
            ((1, 7), (1, 8), 1),
            ((1, 9), (1, 10), 1),
            ((2, 4), (2, 5), 2),
            ((2, 6), (2, 7), 2),
            ((3, 3), (4, 3), 3),
            ((4, 2), (5, 2), 1),
            ((5, 1), (6, 1), 1),
            ((6, 2), (7, 2), 3),
            ((7, 1), (8, 1), 2),
        ],
        arrows: &[
            ((5, 1), (4, 1)),
            ((4, 2), (3, 2)),
            ((1, 5), (1, 4)),
            ((1, 7), (1, 6)),
            ((1, 9), (1, 8)),
            ((7, 1), (6, 1)),
            ((2, 4), (2, 3)),
            ((2, 6), (2, 5)),
            ((6, 2), (5, 2)),
            ((3, 3), (3, 4)),
        ],
        closed: &[],
    },
    GoldenFrame {
        dominoes: &[
            ((1, 4), (1, 5), 1),
            ((1, 6), (1, 7), 1),
            ((1, 8), (1, 9), 1),
            ((2, 3), (2, 4), 2),
            ((2, 5), (2, 6), 2),
            ((3, 2), (4, 2), 1),
            ((3, 3), (3, 4), 3),
            ((4, 1), (5, 1), 1),
            ((5, 2), (6, 2), 3),
            ((6, 1), (7, 1), 2),
        ],
        arrows: &[
            ((4, 1), (3, 1)),
            ((3, 2), (2, 2)),
            ((1, 4), (1, 3)),
            ((1, 6), (1, 5)),
            ((1, 8), (1, 7)),
            ((6, 1), (5, 1)),
            ((2, 3), (3, 3)),
            ((2, 5), (2, 4)),
            ((5, 2), (4, 2)),
            ((3, 4), (3, 5)),
        ],
        closed: &[],
    },
    GoldenFrame {
        dominoes: &[
            ((1, 3), (1, 4), 1),
            ((1, 5), (1, 6), 1),
            ((1, 7), (1, 8), 1),
            ((2, 2), (3, 2), 1),
            ((2, 3), (3, 3), 2),
            ((2, 4), (2, 5), 2),
            ((3, 1), (4, 1), 1),
            ((3, 4), (3, 5), 3),
            ((4, 2), (5, 2), 3),
            ((5, 1), (6, 1), 2),
        ],
        arrows: &[
            ((3, 1), (2, 1)),
            ((2, 2), (1, 2)),
            ((1, 3), (2, 3)),
            ((1, 5), (1, 4)),
            ((1, 7), (1, 6)),
            ((5, 1), (4, 1)),
            ((3, 3), (3, 2)),
            ((4, 2), (4, 3)),
            ((2, 4), (3, 4)),
            ((3, 5), (2, 5)),
        ],
        closed: &[((2, 4), (3, 4)), ((3, 5), (2, 5))],
    },
    GoldenFrame {
        dominoes: &[
            ((1, 2), (2, 2), 1),
            ((1, 3), (2, 3), 1),
            ((1, 4), (1, 5), 1),
            ((1, 6), (1, 7), 1),
            ((2, 1), (3, 1), 1),
            ((2, 4), (2, 5), 2),
            ((3, 2), (3, 3), 2),
            ((3, 4), (3, 5), 3),
            ((4, 1), (5, 1), 2),
            ((4, 2), (4, 3), 3),
        ],
        arrows: &[
            ((2, 1), (1, 1)),
            ((1, 4), (2, 4)),
            ((1, 6), (1, 5)),
            ((4, 1), (3, 1)),
            ((2, 5), (2, 6)),
            ((3, 4), (4, 4)),
            ((1, 2), (1, 3)),
            ((2, 3), (2, 2)),
            ((3, 2), (4, 2)),
            ((4, 3), (3, 3)),
        ],
        closed: &[((1, 2), (1, 3)), ((2, 3), (2, 2)), ((3, 2), (4, 2)), ((4, 3), (3, 3))],
    },
    GoldenFrame {
        dominoes: &[
            ((1, 1), (2, 1), 1),
            ((1, 2), (2, 2), 1),
            ((1, 3), (2, 3), 1),
            ((1, 4), (2, 4), 1),
            ((1, 5), (1, 6), 1),
            ((2, 5), (2, 6), 2),
            ((3, 1), (4, 1), 2),
            ((3, 2), (3, 3), 2),
            ((3, 4), (4, 4), 3),
            ((4, 2), (4, 3), 3),
        ],
        arrows: &[],
        closed: &[],
    },
];

fn cell((r, c): (usize, usize)) -> Cell {
    Cell::new(r, c)
}

fn golden_dominoes(frame: &GoldenFrame) -> Result<BTreeSet<Domino>> {
    frame.dominoes.iter().map(|&(a, b, l)| Domino::new(cell(a), cell(b), l)).collect()
}

fn arrow_set(arrows: &[GoldenArrow]) -> BTreeSet<(Cell, Cell)> {
    arrows.iter().map(|&(a, b)| (cell(a), cell(b))).collect()
}

fn check_golden_trace() -> Check {
    let trace = xi_traced(&syt(GOLDEN_TABLEAU))?;
    ensure!(trace.u == syt("1 2 4/3 5"), "U = {}", trace.u);
    ensure!(trace.s == tab(". . . 2 4/. . 5/1 3"), "S = {}", trace.s);
    ensure!(trace.psi.a == tab("1 2 4/3 5"), "A = {}", trace.psi.a);
    ensure!(trace.psi.b == tab(". . . 2 3/. . 1/4 5"), "B = {}", trace.psi.b);
    ensure!(trace.psi.d == tab(". . . 1 1/. . 2/1 2"), "D = {}", trace.psi.d);
    ensure!(trace.omega == tab(". . . 1 1 1/. . . 2 2/1 1 3/2 3"), "Ω(L) = {}", trace.omega);
    let frames: Vec<&DominoTableau> =
        std::iter::once(&trace.d).chain(trace.theta.iter().map(|s| &s.result)).collect();
    ensure!(frames.len() == GOLDEN_FRAMES.len(), "{} frames", frames.len());
    for (i, (got, want)) in frames.iter().zip(GOLDEN_FRAMES.iter()).enumerate() {
        let got_set: BTreeSet<Domino> = got.dominoes().iter().cloned().collect();
        ensure!(got_set == golden_dominoes(want)?, "frame {i} is {got}");
    }
    for (i, (step, want)) in trace.theta.iter().zip(GOLDEN_FRAMES.iter()).enumerate() {
        let arrows: BTreeSet<(Cell, Cell)> = step.diagram.arrows.iter().map(|a| (a.from, a.to)).collect();
        ensure!(arrows == arrow_set(want.arrows), "arrows of frame {i} differ");
        let closed_cells: BTreeSet<Cell> = step
            .diagram
            .chains
            .iter()
            .filter(|c| !c.open)
            .flat_map(|c| c.dominoes.iter().flat_map(|d| d.cells))
            .collect();
        let closed: BTreeSet<(Cell, Cell)> =
            arrows.iter().filter(|(from, _)| closed_cells.contains(from)).copied().collect();
        ensure!(closed == arrow_set(want.closed), "closed chains of frame {i} differ");
    }
    ensure!(trace.spin() == 3.into(), "spin {}", trace.spin());
    Ok(Ok("U, S, B, D, Ω(L), d(M), four θ frames and spin 3 reproduced".into()))
}

fn check_solved_classes(limits: &Limits) -> Check {
    let lambdas: Vec<Partition> = (1..=limits.expansion).flat_map(solved_partitions).collect();
    let mismatches: Vec<String> = lambdas
        .par_iter()
        .map(|lambda| -> Result<Option<String>> {
            let tableaux = expansion_from_tableaux(lambda)?;
            let oracle = higher_lie_character(lambda)?;
            Ok((tableaux != oracle).then(|| format!("{lambda}: {tableaux} vs {oracle}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    ensure!(mismatches.is_empty(), "{}", mismatches.join("; "));
    Ok(Ok(format!("{} partitions up to n = {}", lambdas.len(), limits.expansion)))
}

fn syt_count(mu: &Partition) -> i64 {
    enumerate_syt(&SkewShape::straight(mu.clone())).len() as i64
}

fn check_oracle(limits: &Limits) -> Check {
    for n in 1..=limits.lie {
        let kw = lie_character_kw(n);
        let kl = lie_character_klyachko(n)?;
        ensure!(kw == kl, "ch(L_{n}): {kw} vs {kl}");
    }
    for n in 1..=limits.sum {
        let mut total = SchurExpansion::new();
        for lambda in enumerate_partitions(n) {
            let e = higher_lie_character(&lambda)?;
            ensure!(e.has_nonnegative_coefficients(), "ch(L_{lambda}) = {e}");
            for (mu, c) in e.iter() {
                total.add(mu.clone(), c);
            }
        }
        let expected: SchurExpansion = enumerate_partitions(n).into_iter().map(|mu| {
            let c = syt_count(&mu);
            (mu, c)
        }).collect();
        ensure!(total == expected, "sum over λ ⊢ {n} is {total}");
    }
    for n in 1..=limits.two_column {
        let e = higher_lie_character(&Partition::new(vec![2; n])?)?;
        let expected: SchurExpansion = enumerate_partitions(2 * n)
            .into_iter()
            .filter(|mu| mu.conjugate().parts().iter().all(|c| c % 2 == 0))
            .map(|mu| (mu, 1))
            .collect();
        ensure!(e == expected, "ch(L_(2^{n})) = {e}");
    }
    Ok(Ok(format!(
        "Lie characters to n = {}, sums to n = {}, two columns to n = {}",
        limits.lie, limits.sum, limits.two_column
    )))
}

fn check_upper_bound(limits: &Limits) -> Check {
    let mut checked = 0;
    for n in 1..=limits.sum {
        for lambda in enumerate_partitions(n) {
            let oracle = higher_lie_character(&lambda)?;
            let mut all_equal = true;
            for mu in enumerate_partitions(n) {
                let count = syt_lambda(&lambda, &mu)?.len() as i64;
                let c = oracle.coefficient(&mu);
                ensure!(c <= count, "c = {c} exceeds |SYT_{lambda}({mu})| = {count}");
                all_equal &= c == count;
                checked += 1;
            }
            ensure!(
                all_equal == lambda.has_distinct_parts(),
                "equality for all μ is {all_equal} for {lambda}"
            );
            // The product of the row characters counts SYT_λ(μ).
            let product = lambda
                .parts()
                .iter()
                .fold(SymFunc::one(), |acc, &p| multiply(&acc, &lie_character_kw(p).to_p()));
            let product = p_to_schur(&product)?;
            for mu in enumerate_partitions(n) {
                let count = syt_lambda(&lambda, &mu)?.len() as i64;
                ensure!(product.coefficient(&mu) == count, "row product differs at {lambda}, {mu}");
            }
        }
    }
    Ok(Ok(format!("{checked} pairs (λ, μ) up to n = {}", limits.sum)))
}

fn check_carre_leclerc(limits: &Limits) -> Check {
    let mut ydt = 0;
    for n in 1..=limits.carre_leclerc {
        let h2 = h_in_p(2);
        for lambda in enumerate_partitions(n) {
            let oracle = p_to_schur(&plethysm(&h2, &schur_to_p(&lambda)))?;
            for mu in enumerate_partitions(2 * n) {
                let count = cl_coefficient(&lambda, &mu)? as i64;
                ensure!(oracle.coefficient(&mu) == count, "h_2[s_{lambda}] at {mu}: {} vs {count}", oracle.coefficient(&mu));
            }
            for tableaux in enumerate_ydt_all(&doubled_square(&lambda)).values() {
                for d in tableaux {
                    let spin = d.spin();
                    ensure!(spin.is_integer(), "non-integral spin {spin} in {d}");
                    let spin_matches = (spin.to_integer() - n as i64).rem_euclid(2) == 0;
                    ensure!((d.h_count() % 4 == 0) == spin_matches, "horizontal count and spin disagree in {d}");
                    ydt += 1;
                }
            }
        }
    }
    Ok(Ok(format!("λ up to n = {}, {ydt} Yamanouchi domino tableaux", limits.carre_leclerc)))
}

fn check_properties(limits: &Limits) -> Check {
    let mut details = Vec::new();
    for check in [
        check_xi as fn(&Limits) -> Check,
        check_switching,
        check_iota,
        check_rsk_subwords,
        check_slide_order,
        check_reversed_order,
    ] {
        match check(limits)? {
            Ok(detail) => details.push(detail),
            Err(failure) => return Ok(Err(failure)),
        }
    }
    Ok(Ok(details.join(", ")))
}

/// `ξ` is a bijection onto pairs `(U, D)` with `U = T_{[n]}` and `wt(D) = sh(T)`.
pub fn check_xi(limits: &Limits) -> Check {
    let mut total = 0;
    for n in 1..=limits.two_row {
        let mut image = HashSet::new();
        for mu in enumerate_partitions(2 * n) {
            for t in enumerate_syt(&SkewShape::straight(mu.clone())) {
                if !halves_agree(&t)? {
                    continue;
                }
                let (u, d) = xi(&t)?;
                let low = t.restrict(Interval::prefix(n))?;
                ensure!(*u.as_tableau() == low, "U differs from the lower half of {t}");
                ensure!(d.weight() == mu.parts(), "weight of ξ({t}) is {:?}", d.weight());
                let lambda = u.straight_shape().expect("straight");
                ensure!(d.outer == doubled_square(&lambda) && d.inner.is_empty(), "shape of ξ({t})");
                ensure!(image.insert((u, d)), "ξ is not injective at {t}");
            }
        }
        let codomain: usize = enumerate_partitions(n)
            .into_iter()
            .map(|lambda| {
                let tilings: usize = enumerate_ydt_all(&doubled_square(&lambda)).values().map(Vec::len).sum();
                syt_count(&lambda) as usize * tilings
            })
            .sum();
        ensure!(image.len() == codomain, "ξ hits {} of {codomain} pairs for n = {n}", image.len());
        total += codomain;
    }
    Ok(Ok(format!("ξ on {total} tableaux")))
}

/// Partitions contained in `outer` of every size.
fn subpartitions(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size())
        .flat_map(enumerate_partitions)
        .filter(|p| outer.contains(p))
        .collect()
}

/// Switching is an involution on nested pairs of standard skew tableaux.
pub fn check_switching(limits: &Limits) -> Check {
    let outers: Vec<Partition> = (1..=limits.switching).flat_map(enumerate_partitions).collect();
    let results: Vec<(usize, Vec<String>)> = outers
        .par_iter()
        .map(|gamma| -> Result<(usize, Vec<String>)> {
            let mut bad = Vec::new();
            let mut pairs = 0;
            for beta in subpartitions(gamma) {
                let outer_shape = SkewShape::new(gamma.clone(), beta.clone())?;
                let ts = enumerate_syt(&outer_shape);
                for alpha in subpartitions(&beta) {
                    let ss = enumerate_syt(&SkewShape::new(beta.clone(), alpha.clone())?);
                    for s in &ss {
                        for t in &ts {
                            pairs += 1;
                            let (t2, s2) = tableau_switch(s, t)?;
                            let (s3, t3) = tableau_switch(&t2, &s2)?;
                            if s3 != *s.as_tableau() || t3 != *t.as_tableau() {
                                bad.push(format!("({s}, {t})"));
                            }
                        }
                    }
                }
            }
            Ok((pairs, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let pairs: usize = results.iter().map(|(n, _)| n).sum();
    let failures: Vec<&String> = results.iter().flat_map(|(_, bad)| bad).collect();
    ensure!(failures.is_empty(), "switching is not involutive at {}", failures[0]);
    Ok(Ok(format!("switching on {pairs} pairs")))
}

/// `ι` is a fixed-point-free involution on `SYT^≠_{(4,4)}` exchanging `<` and `>`.
pub fn check_iota(_: &Limits) -> Check {
    let n = 4;
    let mut checked = 0;
    let lambda = Partition::new(vec![n, n])?;
    for mu in enumerate_partitions(2 * n) {
        for t in syt_lambda(&lambda, &mu)? {
            let class = classify_two_row(&t, n)?;
            if class == TwoRowClass::Equal {
                continue;
            }
            let image = iota(&t)?;
            ensure!(image != t, "ι fixes {t}");
            ensure!(iota(&image)? == t, "ι is not an involution at {t}");
            ensure!(image.straight_shape() == Some(mu.clone()), "ι changes the shape of {t}");
            let image_class = classify_two_row(&image, n)?;
            ensure!(image_class != TwoRowClass::Equal && image_class != class, "ι keeps the class of {t}");
            checked += 1;
        }
    }
    Ok(Ok(format!("ι on {checked} tableaux")))
}

/// `P(st(w_I)) = P(w)^I` for every consecutive `I`.
pub fn check_rsk_subwords(limits: &Limits) -> Check {
    let n = limits.rsk;
    for w in Permutation::all(n) {
        let (p, _) = rsk(&w);
        for start in 1..=n {
            for end in start..=n {
                let interval = Interval::new(start, end);
                let (sub, _) = rsk(&subword_standardize(&w, interval)?);
                ensure!(sub == restricted_rectify(&p, interval)?, "w = {w}, I = {interval}");
            }
        }
    }
    Ok(Ok(format!("RSK subwords in S_{n}")))
}

/// Rectification does not depend on the order of slides.
pub fn check_slide_order(_: &Limits) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let shapes: Vec<SkewShape> = (2..=12)
        .flat_map(enumerate_partitions)
        .flat_map(|outer| {
            let size = outer.size();
            subpartitions(&outer)
                .into_iter()
                .filter(move |inner| size - inner.size() <= 8 && !inner.is_empty())
                .map(move |inner| SkewShape::new(outer.clone(), inner).expect("nested"))
        })
        .collect();
    for _ in 0..200 {
        let shape = shapes.choose(&mut rng).expect("nonempty");
        let tableaux = enumerate_syt(shape);
        let t = tableaux.choose(&mut rng).expect("nonempty");
        let expected = rectify(t)?;
        for _ in 0..20 {
            let (got, _) = rectify_with(t, |holes| rng.gen_range(0..holes.len()))?;
            ensure!(got == expected, "slide order changes the rectification of {t}");
        }
    }
    Ok(Ok("200 random slide orders x 20".into()))
}

/// `|SYT^<| = |SYT^>|` and the reversed order gives the same count.
pub fn check_reversed_order(limits: &Limits) -> Check {
    for n in 1..=limits.two_row {
        let lambda = Partition::new(vec![n, n])?;
        for mu in enumerate_partitions(2 * n) {
            let mut counts: BTreeMap<(bool, TwoRowClass), usize> = BTreeMap::new();
            for t in syt_lambda(&lambda, &mu)? {
                *counts.entry((false, classify_two_row(&t, n)?)).or_default() += 1;
                let reversed = classify_two_row_by(&t, n, |a, b| tableau_cmp(b, a))?;
                *counts.entry((true, reversed)).or_default() += 1;
            }
            let get = |k| counts.get(&k).copied().unwrap_or(0);
            let less = get((false, TwoRowClass::Less));
            let unequal = less + get((false, TwoRowClass::Greater));
            ensure!(2 * less == unequal, "|SYT^<| = {less}, |SYT^≠| = {unequal} at {mu}");
            ensure!(less == get((true, TwoRowClass::Less)), "reversing the order changes |SYT^<| at {mu}");
        }
    }
    Ok(Ok(format!("|SYT^<| = |SYT^≠|/2 to n = {}", limits.two_row)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria_pass() {
        for id in [1, 2, 3] {
            let outcome = run(id, &Limits::FULL);
            assert!(outcome.passed, "{outcome}");
        }
    }

    #[test]
    fn small_limits_pass() {
        let limits = Limits::up_to(4);
        for id in 4..=8 {
            let outcome = run(id, &limits);
            assert!(outcome.passed, "{outcome}");
        }
    }
}
