//! Type B and type D noncrossing partitions, 2-paths and the bijection `phi`
//! between them.
//!
//! The `2n` elements `1..n, -1..-n` sit clockwise on a circle at positions
//! `1..2n`, with `i -> i` and `-i -> n + i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classical::{binomial, catalan};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest `n` the enumerators accept by default.
pub const DEFAULT_CAP: usize = 7;

/// A type B partition of `{±1, .., ±n}`, stored canonically: each block
/// sorted ascending, blocks sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson")]
pub struct SignedBlockPartition {
    n: usize,
    blocks: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionJson {
    n: usize,
    blocks: Vec<Vec<i64>>,
}

impl TryFrom<PartitionJson> for SignedBlockPartition {
    type Error = Error;
    fn try_from(j: PartitionJson) -> Result<Self> {
        SignedBlockPartition::new(j.n, j.blocks)
    }
}

fn negated(block: &[i64]) -> Vec<i64> {
    let mut b: Vec<i64> = block.iter().map(|x| -x).collect();
    b.sort_unstable();
    b
}

impl SignedBlockPartition {
    /// Validates cover, disjointness, negation closure and at most one zero
    /// block. Crossing is not checked; see [`is_noncrossing`].
    pub fn new(n: usize, blocks: Vec<Vec<i64>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        let mut seen = BTreeSet::new();
        let mut blocks: Vec<Vec<i64>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return bad("empty block".into());
            }
            for &x in b {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return bad(format!("{x} is not in ±1..±{n}"));
                }
                if !seen.insert(x) {
                    return bad(format!("{x} appears twice"));
                }
            }
        }
        if seen.len() != 2 * n {
            return bad(format!("blocks cover {} of {} elements", seen.len(), 2 * n));
        }
        blocks.sort();
        let mut zero_blocks = 0;
        for b in &blocks {
            let neg = negated(b);
            if &neg == b {
                zero_blocks += 1;
            } else if blocks.binary_search(&neg).is_err() {
                return bad(format!("negation of block {b:?} is not a block"));
            }
        }
        if zero_blocks > 1 {
            return bad("more than one zero block".into());
        }
        Ok(SignedBlockPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }

    pub fn zero_block(&self) -> Option<&[i64]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&-b[0]))
            .map(Vec::as_slice)
    }

    pub fn nonzero_block_count(&self) -> usize {
        self.blocks.len() - usize::from(self.zero_block().is_some())
    }

    pub fn all_singletons(n: usize) -> Self {
        let blocks = (1..=n as i64).flat_map(|i| [vec![i], vec![-i]]).collect();
        SignedBlockPartition::new(n, blocks).expect("singletons form a partition")
    }
}

impl fmt::Display for SignedBlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let parts: Vec<String> = b.iter().map(i64::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SignedBlockPartition {
    type Err = Error;

    /// Parses `(1,-3,-6),(-1,3,6),(2,-2)`; `n` is the largest absolute value.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not a list of parenthesized blocks"));
        let mut blocks = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let (body, tail) = inner.split_once(')').ok_or_else(bad)?;
            let block = body
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = tail.trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(bad());
                }
            }
        }
        let n = blocks
            .iter()
            .flatten()
            .map(|x| x.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        SignedBlockPartition::new(n, blocks)
    }
}

fn position(n: usize, x: i64) -> usize {
    if x > 0 {
        x as usize
    } else {
        n + x.unsigned_abs() as usize
    }
}

fn element(n: usize, p: usize) -> i64 {
    if p <= n {
        p as i64
    } else {
        -((p - n) as i64)
    }
}

/// Chords joining cyclically successive members of each block, as position
/// pairs `(a, b)` with `a < b`.
fn chords(n: usize, blocks: &[Vec<i64>]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (idx, b) in blocks.iter().enumerate() {
        let mut ps: Vec<usize> = b.iter().map(|&x| position(n, x)).collect();
        ps.sort_unstable();
        match ps.len() {
            0 | 1 => {}
            2 => out.push((ps[0], ps[1], idx)),
            len => {
                for i in 0..len {
                    let (a, c) = (ps[i], ps[(i + 1) % len]);
                    out.push((a.min(c), a.max(c), idx));
                }
            }
        }
    }
    out
}

fn cross(&(a, b, _): &(usize, usize, usize), &(c, d, _): &(usize, usize, usize)) -> bool {
    let inside = |x: usize| a < x && x < b;
    let outside = |x: usize| x < a || x > b;
    (inside(c) && outside(d)) || (inside(d) && outside(c))
}

fn blocks_noncrossing(n: usize, blocks: &[Vec<i64>]) -> bool {
    let cs = chords(n, blocks);
    cs.iter()
        .enumerate()
        .all(|(i, x)| cs[i + 1..].iter().all(|y| x.2 == y.2 || !cross(x, y)))
}

/// No two chords of the circular diagram cross.
pub fn is_noncrossing(p: &SignedBlockPartition) -> bool {
    blocks_noncrossing(p.n, &p.blocks)
}

/// `n` minus half the number of nonzero blocks.
pub fn rank(p: &SignedBlockPartition) -> usize {
    p.n - p.nonzero_block_count() / 2
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

struct Builder {
    n: usize,
    pairs: Vec<(Vec<i64>, Vec<i64>)>,
    zero: Option<Vec<i64>>,
    out: Vec<SignedBlockPartition>,
}

impl Builder {
    fn blocks(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self
            .pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        v.extend(self.zero.clone());
        v
    }

    fn step(&mut self, i: i64) {
        if !blocks_noncrossing(self.n, &self.blocks()) {
            return;
        }
        if i as usize > self.n {
            let p = SignedBlockPartition::new(self.n, self.blocks()).expect("generated partition");
            self.out.push(p);
            return;
        }
        self.pairs.push((vec![i], vec![-i]));
        self.step(i + 1);
        self.pairs.pop();

        for j in 0..self.pairs.len() {
            for side in [false, true] {
                let (a, b) = &mut self.pairs[j];
                let (pos, neg) = if side { (b, a) } else { (a, b) };
                pos.push(i);
                neg.push(-i);
                self.step(i + 1);
                let (a, b) = &mut self.pairs[j];
                a.pop();
                b.pop();
            }
        }

        let had_zero = self.zero.is_some();
        self.zero.get_or_insert_with(Vec::new).extend([i, -i]);
        self.step(i + 1);
        if had_zero {
            let z = self.zero.as_mut().expect("zero block present");
            z.truncate(z.len() - 2);
        } else {
            self.zero = None;
        }
    }
}

/// All noncrossing type B partitions of `{±1..±n}`, built element by element
/// and pruned as soon as a crossing appears.
pub fn enumerate_ncb(n: usize) -> Result<Vec<SignedBlockPartition>> {
    enumerate_ncb_capped(n, DEFAULT_CAP)
}

pub fn enumerate_ncb_capped(n: usize, cap: usize) -> Result<Vec<SignedBlockPartition>> {
    check_cap(n, cap)?;
    let mut b = Builder {
        n,
        pairs: Vec::new(),
        zero: None,
        out: Vec::new(),
    };
    b.step(1);
    b.out.sort();
    Ok(b.out)
}

/// Counts of partitions by rank, `k = 0..n`.
pub fn rank_counts(parts: &[SignedBlockPartition], n: usize) -> Vec<usize> {
    let mut counts = vec![0; n + 1];
    for p in parts {
        counts[rank(p)] += 1;
    }
    counts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankedCount {
    pub n: usize,
    pub k: usize,
    pub count: BigInt,
}

pub fn rank_table(n: usize) -> Result<Vec<RankedCount>> {
    let parts = enumerate_ncb(n)?;
    Ok(rank_counts(&parts, n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| RankedCount {
            n,
            k,
            count: BigInt::from(c),
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    W,
    S,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::W => 'W',
            Step::S => 'S',
        }
    }
}

/// A word over `U D W S` with as many `U` as `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoPath(Vec<Step>);

impl TwoPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let ups = steps.iter().filter(|&&s| s == Step::U).count();
        let downs = steps.iter().filter(|&&s| s == Step::D).count();
        if ups != downs {
            return Err(Error::InvalidPath(format!(
                "{ups} up steps but {downs} down steps"
            )));
        }
        Ok(TwoPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, s: Step) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    fn map(&self, from: Step, to: Step) -> TwoPath {
        TwoPath(
            self.0
                .iter()
                .map(|&s| if s == from { to } else { s })
                .collect(),
        )
    }
}

impl fmt::Display for TwoPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for TwoPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                'W' => Ok(Step::W),
                'S' => Ok(Step::S),
                other => Err(Error::InvalidPath(format!("unknown step `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TwoPath::new(steps)
    }
}

impl Serialize for TwoPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TwoPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All 2-paths of length `n`.
pub fn enumerate_two_paths(n: usize) -> Result<Vec<TwoPath>> {
    check_cap(n, DEFAULT_CAP)?;
    fn go(n: usize, height: i64, word: &mut Vec<Step>, out: &mut Vec<TwoPath>) {
        let left = (n - word.len()) as i64;
        if height.abs() > left {
            return;
        }
        if left == 0 {
            out.push(TwoPath(word.clone()));
            return;
        }
        for (s, dh) in [(Step::U, 1), (Step::D, -1), (Step::W, 0), (Step::S, 0)] {
            word.push(s);
            go(n, height + dh, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    Ok(out)
}

/// Directed arcs `(from, to)` on positions `1..2n`.
fn arcs(p: &SignedBlockPartition) -> BTreeSet<(usize, usize)> {
    let n = p.n;
    let len = 2 * n;
    let cw = |a: usize, b: usize| (b + len - a) % len;
    let mut out = BTreeSet::new();
    for b in &p.blocks {
        if b.len() < 2 {
            continue;
        }
        let mut ps: Vec<usize> = b.iter().map(|&x| position(n, x)).collect();
        ps.sort_unstable();
        let mut edges: Vec<(usize, usize)> = if ps.len() == 2 {
            vec![(ps[0], ps[1])]
        } else {
            (0..ps.len())
                .map(|i| (ps[i], ps[(i + 1) % ps.len()]))
                .collect()
        };
        let is_zero = b.contains(&-b[0]);
        if !is_zero && edges.len() > 1 {
            let short = |&(a, c): &(usize, usize)| cw(a, c).min(cw(c, a));
            let longest = (0..edges.len())
                .max_by_key(|&i| short(&edges[i]))
                .expect("at least two edges");
            edges.remove(longest);
        }
        for (a, c) in edges {
            let (there, back) = (cw(a, c), cw(c, a));
            if there <= back {
                out.insert((a, c));
            }
            if back <= there {
                out.insert((c, a));
            }
        }
    }
    out
}

/// The 2-path of a noncrossing type B partition.
pub fn phi(p: &SignedBlockPartition) -> TwoPath {
    let n = p.n;
    let arcs = arcs(p);
    let next = |i: usize| i % (2 * n) + 1;
    let steps = (1..=n)
        .map(|i| {
            let j = next(i);
            if arcs.contains(&(i, j)) {
                Step::W
            } else if arcs.iter().any(|&(a, b)| a == i && b != j) {
                Step::U
            } else if arcs.iter().any(|&(a, b)| b == j && a != i) {
                Step::D
            } else {
                Step::S
            }
        })
        .collect();
    TwoPath::new(steps).expect("phi produces a balanced word")
}

/// Rebuilds the partition from its 2-path.
///
/// The word is read twice around the circle (positions `1..2n`), starting
/// just after a lowest point; each `U` is matched with the next free `D`, a
/// `U` at `p` matched with a `D` at `p'` giving the arc `p -> p' + 1`, and
/// each `W` at `p` gives `p -> p + 1`. Blocks are the connected components.
pub fn phi_inverse(w: &TwoPath) -> Result<SignedBlockPartition> {
    let n = w.len();
    let len = 2 * n;
    if n == 0 {
        return SignedBlockPartition::new(0, Vec::new());
    }
    let step = |p: usize| w.0[(p - 1) % n];
    let next = |p: usize| p % len + 1;
    let mut height = 0i64;
    let mut low = (0i64, len);
    for p in 1..=len {
        height += match step(p) {
            Step::U => 1,
            Step::D => -1,
            _ => 0,
        };
        if height < low.0 {
            low = (height, p);
        }
    }
    let mut parent: Vec<usize> = (0..=len).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut join = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    let mut open = Vec::new();
    let mut p = low.1;
    for _ in 0..len {
        p = next(p);
        match step(p) {
            Step::U => open.push(p),
            Step::D => {
                let u = open
                    .pop()
                    .ok_or_else(|| Error::InvalidPath(format!("unmatched down step in {w}")))?;
                join(u, next(p));
            }
            Step::W => join(p, next(p)),
            Step::S => {}
        }
    }
    let mut comps: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for q in 1..=len {
        let r = find(&mut parent, q);
        comps.entry(r).or_default().push(element(n, q));
    }
    SignedBlockPartition::new(n, comps.into_values().collect())
}

/// The least (`W -> S`) and greatest (`S -> W`) path in the boolean class.
pub fn boolean_class_extremes(w: &TwoPath) -> (TwoPath, TwoPath) {
    (w.map(Step::W, Step::S), w.map(Step::S, Step::W))
}

/// `binom(n, 2k) binom(2k, k)`, the number of wavy-free 2-paths with `k` up
/// steps.
pub fn gamma_count_b(n: u32, k: u32) -> Result<BigInt> {
    if 2 * k > n {
        return Err(Error::ParameterOutOfRange(format!(
            "need 2k <= n (n={n}, k={k})"
        )));
    }
    Ok(binomial(n as i64, 2 * k as i64) * binomial(2 * k as i64, k as i64))
}

fn need_type_d(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "type D needs n >= 2, got {n}"
        )));
    }
    Ok(())
}

fn is_pair_zero_block(p: &SignedBlockPartition) -> bool {
    p.zero_block().is_some_and(|z| z.len() == 2)
}

/// Noncrossing type B partitions whose zero block is not a single pair.
pub fn enumerate_ncd(n: usize) -> Result<Vec<SignedBlockPartition>> {
    need_type_d(n)?;
    Ok(enumerate_ncb(n)?
        .into_iter()
        .filter(|p| !is_pair_zero_block(p))
        .collect())
}

/// Noncrossing type B partitions whose zero block is exactly `{i, -i}`.
pub fn enumerate_ncb_pair(n: usize, i: usize) -> Result<Vec<SignedBlockPartition>> {
    if i == 0 || i > n {
        return Err(Error::ParameterOutOfRange(format!(
            "need 1 <= i <= n (n={n}, i={i})"
        )));
    }
    let pair = vec![-(i as i64), i as i64];
    Ok(enumerate_ncb(n)?
        .into_iter()
        .filter(|p| p.zero_block() == Some(pair.as_slice()))
        .collect())
}

pub fn cat_d(n: usize) -> Result<BigInt> {
    need_type_d(n)?;
    let n = n as i64;
    Ok(binomial(2 * n, n) - binomial(2 * (n - 1), n - 1))
}

/// `binom(n,k)^2 - n/(n-1) binom(n-1,k) binom(n-1,k-1)`.
pub fn narayana_d(n: usize, k: i64) -> Result<BigInt> {
    need_type_d(n)?;
    let n = n as i64;
    let (q, r) = (binomial(n - 1, k) * binomial(n - 1, k - 1) * n).div_rem(&BigInt::from(n - 1));
    debug_assert!(r.is_zero());
    Ok(binomial(n, k).pow(2) - q)
}

/// Both sides of the type D gamma expansion, as polynomials in `t`.
pub(crate) fn type_d_gamma_sides(n: u32) -> Result<(LaurentPoly, LaurentPoly)> {
    let nn = n as usize;
    need_type_d(nn)?;
    let lhs = LaurentPoly::new(
        0,
        (0..=n as i64)
            .map(|k| narayana_d(nn, k))
            .collect::<Result<_>>()?,
    );
    let one_plus_t = LaurentPoly::from_i64s(0, &[1, 1]);
    let n = n as i64;
    let rhs = (0..=n / 2)
        .map(|k| {
            let mut g = binomial(n, 2 * k) * binomial(2 * k, k);
            if k >= 1 {
                g -= binomial(n - 2, 2 * (k - 1)) * catalan((k - 1) as u32) * n;
            }
            LaurentPoly::monomial(g, k) * one_plus_t.pow((n - 2 * k) as u32)
        })
        .sum();
    Ok((lhs, rhs))
}

pub fn verify_type_d_gamma(n: usize) -> crate::identities::VerificationReport {
    crate::identities::verify(crate::identities::IdentityId::TypeDGamma, &[n as i64])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> SignedBlockPartition {
        "(1,-3,-6),(-1,3,6),(2,-2),(4),(-4),(5),(-5)"
            .parse()
            .unwrap()
    }

    #[test]
    fn validation() {
        assert!(SignedBlockPartition::new(2, vec![vec![1, -2], vec![-1, 2]]).is_ok());
        assert!(SignedBlockPartition::new(2, vec![vec![1, 2], vec![-1]]).is_err());
        assert!(SignedBlockPartition::new(1, vec![vec![1], vec![-1], vec![1]]).is_err());
        assert!(SignedBlockPartition::new(2, vec![vec![1, -1], vec![2, -2]]).is_err());
        assert!(SignedBlockPartition::new(1, vec![vec![1, 2], vec![-1, -2]]).is_err());
        assert!("(1,-1),".parse::<SignedBlockPartition>().is_err());
        assert!("(1,x)".parse::<SignedBlockPartition>().is_err());
    }

    #[test]
    fn noncrossing_examples() {
        assert!(is_noncrossing(&worked_example()));
        assert!(is_noncrossing(&SignedBlockPartition::all_singletons(3)));
        // At n = 2 the chords 1 -- -2 and -1 -- 2 are nested, not crossing.
        let nested = SignedBlockPartition::new(2, vec![vec![1, -2], vec![-1, 2]]).unwrap();
        assert!(is_noncrossing(&nested));
        let crossing: SignedBlockPartition = "(1,-1),(2,-3),(-2,3)".parse().unwrap();
        assert!(!is_noncrossing(&crossing));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SignedBlockPartition::all_singletons(3)), 0);
        assert_eq!(rank(&worked_example()), 3);
        let all = SignedBlockPartition::new(2, vec![vec![1, 2, -1, -2]]).unwrap();
        assert_eq!(rank(&all), 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ncb(1).unwrap().len(), 2);
        assert_eq!(enumerate_ncb(2).unwrap().len(), 6);
        assert_eq!(enumerate_ncb(4).unwrap().len(), 70);
        assert_eq!(
            enumerate_ncb(8).unwrap_err(),
            Error::CapExceeded {
                n: 8,
                cap: DEFAULT_CAP
            }
        );
        assert_eq!(enumerate_two_paths(0).unwrap().len(), 1);
        assert_eq!(enumerate_two_paths(1).unwrap().len(), 2);
        assert_eq!(enumerate_two_paths(2).unwrap().len(), 6);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&worked_example()).to_string(), "DUUSDW");
        assert_eq!(
            phi(&SignedBlockPartition::all_singletons(3)).to_string(),
            "SSS"
        );
        let zero = SignedBlockPartition::new(1, vec![vec![1, -1]]).unwrap();
        assert_eq!(phi(&zero).to_string(), "W");
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(&"DUUSDW".parse().unwrap()).unwrap(), worked_example());
        assert_eq!(
            phi_inverse(&"SSSS".parse().unwrap()).unwrap(),
            SignedBlockPartition::all_singletons(4)
        );
    }

    #[test]
    fn two_path_parsing() {
        assert!("UU".parse::<TwoPath>().is_err());
        assert!("UX".parse::<TwoPath>().is_err());
        let w: TwoPath = "UDW".parse().unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"UDW\"");
    }

    #[test]
    fn boolean_extremes() {
        let ss: TwoPath = "SS".parse().unwrap();
        let (lo, hi) = boolean_class_extremes(&ss);
        assert_eq!((lo.to_string(), hi.to_string()), ("SS".into(), "WW".into()));
        let udw: TwoPath = "UDW".parse().unwrap();
        let (lo, hi) = boolean_class_extremes(&udw);
        assert_eq!(
            (lo.to_string(), hi.to_string()),
            ("UDS".into(), "UDW".into())
        );
        let ud: TwoPath = "UD".parse().unwrap();
        assert_eq!(boolean_class_extremes(&ud), (ud.clone(), ud));
    }

    #[test]
    fn gamma_count_examples() {
        assert_eq!(gamma_count_b(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(gamma_count_b(5, 0).unwrap(), BigInt::from(1));
        assert_eq!(gamma_count_b(4, 2).unwrap(), BigInt::from(6));
        assert!(gamma_count_b(3, 2).is_err());
    }

    #[test]
    fn type_d_formulas() {
        assert_eq!(cat_d(2).unwrap(), BigInt::from(4));
        assert_eq!(cat_d(3).unwrap(), BigInt::from(14));
        assert_eq!(narayana_d(2, 1).unwrap(), BigInt::from(2));
        assert!(cat_d(1).is_err());
        for n in 2..=4 {
            assert!(verify_type_d_gamma(n).is_verified());
        }
    }

    #[test]
    fn json_round_trip() {
        let p = worked_example();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"n":6,"blocks":[[-6,-3,1],[-5],[-4],[-2,2],[-1,3,6],[4],[5]]}"#
        );
        let back: SignedBlockPartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SignedBlockPartition>(r#"{"n":1,"blocks":[[1]]}"#).is_err());
    }
}
