//! Exact symmetric functions in the power-sum basis, plethysm, Schur
//! conversion through symmetric group characters, and Lie characters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{enumerate_partitions, Partition, SkewShape};
use crate::tableau::enumerate_syt;

/// A homogeneous symmetric function `Σ f_μ p_μ` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SymFunc::p(Partition::empty())
    }

    /// The power sum `p_μ`.
    pub fn p(mu: Partition) -> Self {
        let degree = mu.size();
        SymFunc { degree, coeffs: BTreeMap::from([(mu, BigRational::one())]) }
    }

    /// Builds from `(μ, f_μ)` pairs, all of size `degree`.
    pub fn from_terms<I: IntoIterator<Item = (Partition, BigRational)>>(degree: usize, terms: I) -> Result<Self> {
        let mut f = SymFunc::zero(degree);
        for (mu, c) in terms {
            if mu.size() != degree {
                return Err(Error::SizeMismatch { expected: degree, actual: mu.size() });
            }
            f.add_term(mu, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    pub fn coefficient(&self, mu: &Partition) -> BigRational {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for (mu, v) in &self.coeffs {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    /// `p_r[f]`: every `p_s` replaced by `p_{rs}`.
    fn adams(&self, r: usize) -> SymFunc {
        let mut out = SymFunc::zero(self.degree * r);
        for (mu, c) in &self.coeffs {
            let scaled = Partition::from_unsorted(mu.parts().iter().map(|&x| x * r).collect());
            out.add_term(scaled, c.clone());
        }
        out
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, other: &SymFunc) -> SymFunc {
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = SymFunc { degree, coeffs: self.coeffs.clone() };
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, other: &SymFunc) -> SymFunc {
        self + &(-other)
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;

    fn mul(self, other: &SymFunc) -> SymFunc {
        multiply(self, other)
    }
}

/// `z_μ = Π i^{m_i} m_i!`.
pub fn z_of(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (i, m) in counts {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

/// The number-theoretic Möbius function.
pub fn mobius(d: usize) -> i32 {
    assert!(d >= 1, "mobius is defined for positive integers");
    let mut n = d;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

type CharacterMemo = Mutex<HashMap<(Partition, Partition), i64>>;

fn character_memo() -> &'static CharacterMemo {
    static MEMO: OnceLock<CharacterMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The irreducible character `χ^ν` at cycle type `ρ` (Murnaghan–Nakayama).
pub fn mn_character(nu: &Partition, rho: &Partition) -> Result<i64> {
    if nu.size() != rho.size() {
        return Err(Error::SizeMismatch { expected: nu.size(), actual: rho.size() });
    }
    Ok(mn_rec(nu, rho))
}

fn mn_rec(nu: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (nu.clone(), rho.clone());
    if let Some(&v) = character_memo().lock().expect("memo lock").get(&key) {
        return v;
    }
    let r = rho.first();
    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("tail of a partition");
    // first-column hook lengths; a border strip of size r is a move b -> b - r
    let len = nu.len();
    let beta: Vec<usize> = (0..len).map(|i| nu.parts()[i] + len - 1 - i).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let l = next.len();
        let parts: Vec<usize> = next.iter().enumerate().map(|(j, &x)| x + j + 1 - l).collect();
        let smaller = Partition::from_unsorted(parts);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&smaller, &rest);
    }
    character_memo().lock().expect("memo lock").insert(key, total);
    total
}

/// Character table of `S_n` with rows and columns indexed by partitions of
/// `n` in decreasing lexicographic order.
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn index_of(&self, mu: &Partition) -> Option<usize> {
        self.index.get(mu).copied()
    }
}

/// Cached character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.lock().expect("table lock").get(&n) {
        return Arc::clone(t);
    }
    let partitions = enumerate_partitions(n);
    let values = partitions
        .iter()
        .map(|nu| partitions.iter().map(|rho| mn_rec(nu, rho)).collect())
        .collect();
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = Arc::new(CharacterTable { partitions, values, index });
    tables.lock().expect("table lock").entry(n).or_insert(table).clone()
}

/// `s_ν = Σ_ρ χ^ν(ρ) p_ρ / z_ρ`.
pub fn schur_to_p(nu: &Partition) -> SymFunc {
    let n = nu.size();
    let table = character_table(n);
    let row = &table.values[table.index_of(nu).expect("partition of n")];
    let mut f = SymFunc::zero(n);
    for (rho, &chi) in table.partitions.iter().zip(row) {
        f.add_term(rho.clone(), BigRational::new(BigInt::from(chi), z_of(rho)));
    }
    f
}

/// Schur coefficients `⟨f, s_ν⟩ = Σ_ρ f_ρ χ^ν(ρ)`; errors if one is not an integer.
pub fn p_to_schur(f: &SymFunc) -> Result<SchurExpansion> {
    let n = f.degree;
    let table = character_table(n);
    let mut out = SchurExpansion::default();
    for (i, nu) in table.partitions.iter().enumerate() {
        let mut c = BigRational::zero();
        for (rho, coeff) in &f.coeffs {
            let j = table.index_of(rho).ok_or(Error::SizeMismatch { expected: n, actual: rho.size() })?;
            c += coeff * BigRational::from_integer(BigInt::from(table.values[i][j]));
        }
        if !c.is_integer() {
            return Err(Error::NonIntegral(nu.clone()));
        }
        let v = c.to_integer().to_i64().ok_or_else(|| Error::NonIntegral(nu.clone()))?;
        out.insert(nu.clone(), v);
    }
    Ok(out)
}

/// Product in the power-sum basis, where `p_μ p_ν = p_{μ∪ν}`.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.degree + g.degree);
    for (mu, a) in &f.coeffs {
        for (nu, b) in &g.coeffs {
            out.add_term(crate::shapes::union(mu, nu), a * b);
        }
    }
    out
}

/// `h_k` via `h_k = (1/k) Σ_{i=1}^k p_i h_{k-i}`.
pub fn h_in_p(k: usize) -> SymFunc {
    let mut h = vec![SymFunc::one()];
    for m in 1..=k {
        let mut acc = SymFunc::zero(m);
        for i in 1..=m {
            acc = &acc + &multiply(&SymFunc::p(Partition::row(i)), &h[m - i]);
        }
        h.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(m))));
    }
    h.swap_remove(k)
}

/// `g[f]`, determined by `p_r[f] = f(x_1^r, x_2^r, ...)`.
pub fn plethysm(g: &SymFunc, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(g.degree * f.degree);
    let mut adams: BTreeMap<usize, SymFunc> = BTreeMap::new();
    for (mu, c) in &g.coeffs {
        let mut term = SymFunc::one().scale(c);
        for &r in mu.parts() {
            let pr = adams.entry(r).or_insert_with(|| f.adams(r));
            term = multiply(&term, pr);
        }
        out = &out + &term;
    }
    out
}

/// Integer Schur coefficients, zero entries omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion(BTreeMap<Partition, i64>);

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn insert(&mut self, mu: Partition, c: i64) {
        if c == 0 {
            self.0.remove(&mu);
        } else {
            self.0.insert(mu, c);
        }
    }

    pub fn add(&mut self, mu: Partition, c: i64) {
        let v = self.coefficient(&mu) + c;
        self.insert(mu, v);
    }

    pub fn coefficient(&self, mu: &Partition) -> i64 {
        self.0.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Terms in decreasing lexicographic order of partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.0.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn to_p(&self) -> SymFunc {
        let degree = self.0.keys().next().map_or(0, |p| p.size());
        let mut f = SymFunc::zero(degree);
        for (nu, &c) in &self.0 {
            f = &f + &schur_to_p(nu).scale(&BigRational::from_integer(BigInt::from(c)));
        }
        f
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }
}

impl FromIterator<(Partition, i64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut out = SchurExpansion::default();
        for (mu, c) in iter {
            out.add(mu, c);
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    /// `s_{4,2} + 2 s_{3,2,1}`; `0` when empty and `1` for `s_∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mu, c) in self.iter() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if mu.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a} ")?;
            }
            write!(f, "s_{{{mu}}}")?;
        }
        Ok(())
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.iter().map(|(p, c)| (p.to_string(), c)))
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| k.parse::<Partition>().map(|p| (p, v)).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// `ch(L_n)` as `Σ_μ |{T ∈ SYT(μ) : maj(T) ≡ 1 (mod n)}| s_μ`.
pub fn lie_character_kw(n: usize) -> SchurExpansion {
    assert!(n >= 1, "Lie characters are defined for n >= 1");
    enumerate_partitions(n)
        .into_iter()
        .map(|mu| {
            let count = enumerate_syt(&SkewShape::straight(mu.clone()))
                .iter()
                .filter(|t| t.maj() % n == 1 % n)
                .count();
            (mu, count as i64)
        })
        .collect()
}

/// `ch(L_n)` as the character induced from a faithful character of the cyclic
/// group generated by an `n`-cycle.
pub fn lie_character_klyachko(n: usize) -> Result<SchurExpansion> {
    assert!(n >= 1, "Lie characters are defined for n >= 1");
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut out = SchurExpansion::new();
    for nu in enumerate_partitions(n) {
        let mut total = 0i64;
        for &d in &divisors {
            let cycle_type = Partition::new(vec![d; n / d]).expect("rectangle");
            total += mobius(d) as i64 * mn_rec(&nu, &cycle_type);
        }
        if total % n as i64 != 0 {
            return Err(Error::NonIntegral(nu));
        }
        out.insert(nu, total / n as i64);
    }
    Ok(out)
}

/// `ch(L_λ) = Π_i h_{m_i(λ)}[ch(L_i)]`, with `ch(L_i)` from major-index counts.
pub fn higher_lie_character(lambda: &Partition) -> Result<SchurExpansion> {
    let mut product = SymFunc::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (i, m) in counts {
        let lie = lie_character_kw(i).to_p();
        product = multiply(&product, &plethysm(&h_in_p(m), &lie));
    }
    p_to_schur(&product)
}

/// Coefficient of `s_μ`, zero when absent.
pub fn schur_coefficient(f: &SchurExpansion, mu: &Partition) -> i64 {
    f.coefficient(mu)
}
