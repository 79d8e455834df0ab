//! Refined Thrall subsets: the standard tableaux whose count per shape gives the
//! Schur coefficients of `ch(L_λ)` for every class of `λ` with a known formula.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jdt::restricted_rectify;
use crate::shapes::{consecutive_intervals, enumerate_partitions, max_des, Interval, Partition, SkewShape};
use crate::symfunc::{higher_lie_character, SchurExpansion};
use crate::tableau::{enumerate_syt, tableau_cmp, StandardTableau};
use crate::vanleeuwen::spin_of_syt;

/// All `T ∈ SYT(μ)` with `maj_{λ,i}(T) ≡ 1 (mod λ_i)` for every block `i`.
pub fn syt_lambda(lambda: &Partition, mu: &Partition) -> Result<Vec<StandardTableau>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.size() });
    }
    Ok(enumerate_syt(&SkewShape::straight(mu.clone()))
        .into_iter()
        .filter(|t| in_syt_lambda(lambda, t))
        .collect())
}

pub fn in_syt_lambda(lambda: &Partition, t: &StandardTableau) -> bool {
    (1..=lambda.len()).all(|i| {
        let part = lambda.part(i);
        t.block_maj(lambda, i) % part == 1 % part
    })
}

/// How the lower half `T_{[n]}` compares with the rectified upper half `T^{[n+1,2n]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum TwoRowClass {
    Less,
    Equal,
    Greater,
}

impl fmt::Display for TwoRowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwoRowClass::Less => "LESS",
            TwoRowClass::Equal => "EQUAL",
            TwoRowClass::Greater => "GREATER",
        })
    }
}

pub fn classify_two_row(t: &StandardTableau, n: usize) -> Result<TwoRowClass> {
    classify_two_row_by(t, n, tableau_cmp)
}

/// [`classify_two_row`] under an arbitrary total order on straight tableaux.
pub fn classify_two_row_by(
    t: &StandardTableau,
    n: usize,
    cmp: impl Fn(&StandardTableau, &StandardTableau) -> Ordering,
) -> Result<TwoRowClass> {
    if t.len() != 2 * n {
        return Err(Error::SizeMismatch { expected: 2 * n, actual: t.len() });
    }
    let low = StandardTableau::try_from(t.restrict(Interval::prefix(n))?)?;
    let high = restricted_rectify(t, Interval::new(n + 1, 2 * n))?;
    Ok(match cmp(&low, &high) {
        Ordering::Less => TwoRowClass::Less,
        Ordering::Equal => TwoRowClass::Equal,
        Ordering::Greater => TwoRowClass::Greater,
    })
}

/// The rectangular pieces of a composite `λ`, with the subset used for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    /// `(a)`: major index `≡ 1 (mod a)`.
    Row(usize),
    /// `(a,a)`: lower half below the upper half, or equal halves with spin `≡ a (mod 2)`.
    Pair(usize),
    /// `(2^k)`: block condition and `Des = maxDes`.
    Twos(usize),
    /// `(1^k)`: no descents.
    Ones(usize),
}

impl Piece {
    pub fn size(&self) -> usize {
        match *self {
            Piece::Row(a) => a,
            Piece::Pair(a) => 2 * a,
            Piece::Twos(k) => 2 * k,
            Piece::Ones(k) => k,
        }
    }

    pub fn partition(&self) -> Partition {
        let parts = match *self {
            Piece::Row(a) => vec![a],
            Piece::Pair(a) => vec![a, a],
            Piece::Twos(k) => vec![2; k],
            Piece::Ones(k) => vec![1; k],
        };
        Partition::new(parts).expect("rectangular piece")
    }

    /// Membership of a straight standard tableau of size `self.size()`.
    pub fn contains(&self, u: &StandardTableau) -> Result<bool> {
        Ok(match *self {
            Piece::Row(a) => u.maj() % a == 1 % a,
            Piece::Pair(a) => {
                in_syt_lambda(&self.partition(), u)
                    && match classify_two_row(u, a)? {
                        TwoRowClass::Less => true,
                        TwoRowClass::Equal => spin_parity_matches(u, a)?,
                        TwoRowClass::Greater => false,
                    }
            }
            Piece::Twos(_) => {
                let shape = u.straight_shape().ok_or(Error::NotSkew)?;
                in_syt_lambda(&self.partition(), u) && u.descent_set() == max_des(&shape)?
            }
            Piece::Ones(_) => u.descent_set().is_empty(),
        })
    }
}

fn spin_parity_matches(u: &StandardTableau, n: usize) -> Result<bool> {
    let spin = spin_of_syt(u)?;
    Ok(spin.is_integer() && (spin.to_integer() - n as i64).rem_euclid(2) == 0)
}

/// The formula used for `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolvedClass {
    Distinct,
    OneColumn,
    TwoColumn,
    Hook { arm: usize },
    TwoRow(usize),
    Composite(Vec<Piece>),
}

impl fmt::Display for SolvedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvedClass::Distinct => f.write_str("distinct parts"),
            SolvedClass::OneColumn => f.write_str("one column"),
            SolvedClass::TwoColumn => f.write_str("two columns"),
            SolvedClass::Hook { .. } => f.write_str("hook"),
            SolvedClass::TwoRow(_) => f.write_str("two equal rows"),
            SolvedClass::Composite(_) => f.write_str("parts above 2 at most twice"),
        }
    }
}

/// Splits `λ` into rectangular pieces if every part above 2 occurs at most twice.
pub fn composite_pieces(lambda: &Partition) -> Option<Vec<Piece>> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let mut pieces = Vec::new();
    for (&a, &k) in counts.iter().rev() {
        pieces.push(match (a, k) {
            (1, k) => Piece::Ones(k),
            (2, k) => Piece::Twos(k),
            (a, 1) => Piece::Row(a),
            (a, 2) => Piece::Pair(a),
            _ => return None,
        });
    }
    Some(pieces)
}

/// The class that decides the formula for `λ`, in priority order.
pub fn classify(lambda: &Partition) -> Result<SolvedClass> {
    let n = lambda.size();
    let parts = lambda.parts();
    if lambda.has_distinct_parts() {
        return Ok(SolvedClass::Distinct);
    }
    if parts.iter().all(|&p| p == 1) {
        return Ok(SolvedClass::OneColumn);
    }
    if parts.iter().all(|&p| p == 2) {
        return Ok(SolvedClass::TwoColumn);
    }
    if parts[1..].iter().all(|&p| p == 1) {
        return Ok(SolvedClass::Hook { arm: n - (parts.len() - 1) });
    }
    if parts.len() == 2 && parts[0] == parts[1] {
        return Ok(SolvedClass::TwoRow(parts[0]));
    }
    composite_pieces(lambda)
        .map(SolvedClass::Composite)
        .ok_or_else(|| Error::UnsolvedClass(lambda.clone()))
}

/// Membership in the refined Thrall subset for `λ` of a tableau of size `|λ|`.
pub fn in_thrall_subset(class: &SolvedClass, lambda: &Partition, t: &StandardTableau) -> Result<bool> {
    Ok(match class {
        SolvedClass::Distinct => in_syt_lambda(lambda, t),
        SolvedClass::OneColumn => t.descent_set().is_empty(),
        SolvedClass::TwoColumn => Piece::Twos(lambda.len()).contains(t)?,
        SolvedClass::Hook { arm } => in_syt_lambda(lambda, t) && t.descent_set().iter().all(|&d| d <= *arm),
        SolvedClass::TwoRow(n) => Piece::Pair(*n).contains(t)?,
        SolvedClass::Composite(pieces) => in_syt_lambda(lambda, t) && pieces_accept(pieces, t)?,
    })
}

/// `T^{I_j}` lies in the subset of the `j`-th piece for every `j`.
fn pieces_accept(pieces: &[Piece], t: &StandardTableau) -> Result<bool> {
    let sizes: Vec<usize> = pieces.iter().map(Piece::size).collect();
    for (piece, interval) in pieces.iter().zip(consecutive_intervals(&sizes)) {
        if interval.is_empty() {
            continue;
        }
        if !piece.contains(&restricted_rectify(t, interval)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The refined `(λ, μ)`-Thrall subset for `λ` in a solved class.
pub fn thrall_subset(lambda: &Partition, mu: &Partition) -> Result<Vec<StandardTableau>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.size() });
    }
    let class = classify(lambda)?;
    let mut out = Vec::new();
    for t in enumerate_syt(&SkewShape::straight(mu.clone())) {
        if in_thrall_subset(&class, lambda, &t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Tableaux `T ∈ SYT(μ)` whose every `T^{I_j}` lies in its piece's subset,
/// without requiring `T ∈ SYT_λ(μ)`.
pub fn product_subset(lambda: &Partition, mu: &Partition) -> Result<Vec<StandardTableau>> {
    let pieces = composite_pieces(lambda).ok_or_else(|| Error::UnsolvedClass(lambda.clone()))?;
    let mut out = Vec::new();
    for t in enumerate_syt(&SkewShape::straight(mu.clone())) {
        if pieces_accept(&pieces, &t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// `μ ↦ |thrall_subset(λ, μ)|`.
pub fn expansion_from_tableaux(lambda: &Partition) -> Result<SchurExpansion> {
    classify(lambda)?;
    let counts = enumerate_partitions(lambda.size())
        .into_par_iter()
        .map(|mu| thrall_subset(lambda, &mu).map(|s| (mu, s.len() as i64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(counts.into_iter().collect())
}

fn as_string<S: Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Oracle coefficient against tableau count for one `(λ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThrallReport {
    #[serde(serialize_with = "as_string")]
    pub lambda: Partition,
    #[serde(serialize_with = "as_string")]
    pub mu: Partition,
    pub oracle: i64,
    pub count: usize,
    pub matched: bool,
    pub witnesses: Vec<StandardTableau>,
}

/// One report per `μ ⊢ |λ|`, in decreasing lexicographic order of `μ`.
pub fn verify(lambda: &Partition) -> Result<Vec<ThrallReport>> {
    classify(lambda)?;
    let oracle = higher_lie_character(lambda)?;
    enumerate_partitions(lambda.size())
        .into_par_iter()
        .map(|mu| {
            let witnesses = thrall_subset(lambda, &mu)?;
            let expected = oracle.coefficient(&mu);
            Ok(ThrallReport {
                lambda: lambda.clone(),
                oracle: expected,
                count: witnesses.len(),
                matched: expected == witnesses.len() as i64,
                mu,
                witnesses,
            })
        })
        .collect()
}

/// For `λ` outside the solved classes: `(μ, c_{λ,μ}, |SYT_λ(μ)|)` for every `μ`.
pub fn compare_unsolved(lambda: &Partition) -> Result<Vec<(Partition, i64, usize)>> {
    let oracle = higher_lie_character(lambda)?;
    enumerate_partitions(lambda.size())
        .into_iter()
        .map(|mu| {
            let count = syt_lambda(lambda, &mu)?.len();
            Ok((mu.clone(), oracle.coefficient(&mu), count))
        })
        .collect()
}

/// Every `λ ⊢ n` with a known formula.
pub fn solved_partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n).into_iter().filter(|l| classify(l).is_ok()).collect()
}

/// Interval `I_j` of each piece, for display.
pub fn piece_intervals(pieces: &[Piece]) -> Vec<Interval> {
    let sizes: Vec<usize> = pieces.iter().map(Piece::size).collect();
    consecutive_intervals(&sizes)
}
