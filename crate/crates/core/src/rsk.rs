//! Robinson–Schensted insertion for permutations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Interval};
use crate::tableau::{StandardTableau, Tableau};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for x in 1..=n {
                if !used[x - 1] {
                    used[x - 1] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x - 1] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&words.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        Permutation::new(images)
    }
}

/// Row insertion: returns `(P(w), Q(w))`.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut q: BTreeMap<Cell, usize> = BTreeMap::new();
    for (step, &letter) in w.images().iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                q.insert(Cell::new(r + 1, 1), step + 1);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(pos) => {
                    x = std::mem::replace(&mut rows[r][pos], x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    q.insert(Cell::new(r + 1, rows[r].len()), step + 1);
                    break;
                }
            }
        }
    }
    let p = Tableau::from_cells(rows.iter().enumerate().flat_map(|(r, row)| {
        row.iter().enumerate().map(move |(c, &e)| (Cell::new(r + 1, c + 1), e))
    }))
    .expect("positive entries");
    let q = Tableau::new(q).expect("positive entries");
    (StandardTableau::new_unchecked(p), StandardTableau::new_unchecked(q))
}

/// The pattern of the subword of letters lying in `interval`.
pub fn subword_standardize(w: &Permutation, interval: Interval) -> Result<Permutation> {
    if interval.start == 0 || interval.end > w.len() || interval.start > interval.end + 1 {
        return Err(Error::IntervalOutOfRange {
            start: interval.start,
            end: interval.end,
            size: w.len(),
        });
    }
    let offset = interval.start - 1;
    Ok(Permutation(
        w.images().iter().filter(|&&x| interval.contains(x)).map(|&x| x - offset).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::enumerate_partitions;
    use crate::shapes::SkewShape;
    use crate::tableau::enumerate_syt;
    use std::collections::HashSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn insertion_examples() {
        let (p, q) = rsk(&perm("3 1 2"));
        assert_eq!(p, StandardTableau::from_rows(&[&[1, 2], &[3]]).unwrap());
        assert_eq!(q, StandardTableau::from_rows(&[&[1, 3], &[2]]).unwrap());
        let (p, q) = rsk(&Permutation::identity(4));
        assert_eq!(p, StandardTableau::from_rows(&[&[1, 2, 3, 4]]).unwrap());
        assert_eq!(p, q);
    }

    #[test]
    fn bijective_on_s4() {
        let pairs: HashSet<_> = Permutation::all(4).iter().map(rsk).collect();
        let expected: usize = enumerate_partitions(4)
            .into_iter()
            .map(|mu| enumerate_syt(&SkewShape::straight(mu)).len().pow(2))
            .sum();
        assert_eq!(pairs.len(), 24);
        assert_eq!(expected, 24);
        assert!(pairs.iter().all(|(p, q)| p.straight_shape() == q.straight_shape()));
    }

    #[test]
    fn subword_examples() {
        assert_eq!(subword_standardize(&perm("3 1 2"), Interval::new(2, 3)).unwrap(), perm("2 1"));
        assert_eq!(subword_standardize(&perm("3 1 2"), Interval::prefix(3)).unwrap(), perm("3 1 2"));
        assert_eq!(subword_standardize(&perm("2 4 1 3"), Interval::new(2, 4)).unwrap(), perm("1 3 2"));
        assert!(subword_standardize(&perm("2 1"), Interval::new(2, 3)).is_err());
    }

    #[test]
    fn parse_rejects_non_permutations() {
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("a".parse::<Permutation>().is_err());
        assert_eq!(perm("2 3 1").inverse(), perm("3 1 2"));
    }
}
