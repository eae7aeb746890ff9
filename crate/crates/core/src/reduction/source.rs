use std::fmt::Write as _;

use thiserror::Error;

/// Largest number of sets (or vertices) the brute-force oracles accept.
pub const ORACLE_LIMIT: usize = 20;

/// A universe `1..=universe` (0-based internally) and a family of nonempty
/// subsets. Serves both Exact Cover and Exact Hitting Set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub universe: usize,
    /// Each set sorted ascending, 0-based elements.
    pub sets: Vec<Vec<usize>>,
}

/// A graph on vertices `0..n` and a budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    pub n: usize,
    /// In input order, `u < v`.
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{what} = {value} exceeds the brute-force limit of {limit}")]
    SizeLimit { what: &'static str, value: usize, limit: usize },
    #[error("invalid source instance: {0}")]
    Invalid(String),
}

fn parse_err(line: usize, message: impl Into<String>) -> SourceError {
    SourceError::Parse {
        line,
        message: message.into(),
    }
}

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number(line: usize, tok: &str) -> Result<usize, SourceError> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a number, found {tok:?}")))
}

impl SetSystem {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>) -> Result<Self, SourceError> {
        let mut out = Vec::with_capacity(sets.len());
        for (j, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            if s.is_empty() {
                return Err(SourceError::Invalid(format!("set {} is empty", j + 1)));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(SourceError::Invalid(format!("set {} repeats an element", j + 1)));
            }
            if let Some(&x) = s.iter().find(|&&x| x >= universe) {
                return Err(SourceError::Invalid(format!("element {} outside the universe", x + 1)));
            }
            out.push(s);
        }
        Ok(Self { universe, sets: out })
    }

    /// `sigma`: the total size of all sets.
    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    /// Number of sets containing each element.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.universe];
        for s in &self.sets {
            for &x in s {
                occ[x] += 1;
            }
        }
        occ
    }

    /// Parses `u <n>` followed by one set per line, 1-based elements.
    pub fn parse(text: &str) -> Result<Self, SourceError> {
        let mut recs = records(text);
        let (line, head) = recs.next().ok_or_else(|| parse_err(1, "missing `u <n>` header"))?;
        if head.len() != 2 || head[0] != "u" {
            return Err(parse_err(line, "expected `u <n>` header"));
        }
        let universe = number(line, head[1])?;
        let mut sets = Vec::new();
        for (line, toks) in recs {
            let mut s = Vec::with_capacity(toks.len());
            for tok in toks {
                let x = number(line, tok)?;
                if x == 0 || x > universe {
                    return Err(parse_err(line, format!("element {x} outside 1..={universe}")));
                }
                s.push(x - 1);
            }
            let before = s.len();
            s.sort_unstable();
            s.dedup();
            if s.len() != before {
                return Err(parse_err(line, "element repeated within a set"));
            }
            sets.push(s);
        }
        Self::new(universe, sets)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("u {}\n", self.universe);
        for s in &self.sets {
            let line: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

impl VcInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, k: usize) -> Result<Self, SourceError> {
        let mut seen = std::collections::HashSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(SourceError::Invalid(format!("bad edge {{{}, {}}}", u + 1, v + 1)));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(SourceError::Invalid(format!("duplicate edge {{{}, {}}}", e.0 + 1, e.1 + 1)));
            }
            norm.push(e);
        }
        Ok(Self { n, edges: norm, k })
    }

    /// Parses `p vc <n> <m>`, `m` lines `e <u> <v>` and `k <k>`.
    pub fn parse(text: &str) -> Result<Self, SourceError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut k = None;
        for (line, toks) in records(text) {
            match toks.as_slice() {
                ["p", "vc", n, m] if header.is_none() => header = Some((number(line, n)?, number(line, m)?)),
                ["e", u, v] if header.is_some() => {
                    let n = header.unwrap().0;
                    let (u, v) = (number(line, u)?, number(line, v)?);
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(parse_err(line, format!("vertex outside 1..={n}")));
                    }
                    if u == v {
                        return Err(parse_err(line, "self-loop"));
                    }
                    edges.push((u - 1, v - 1));
                }
                ["k", x] if header.is_some() && k.is_none() => k = Some(number(line, x)?),
                _ => return Err(parse_err(line, "unexpected record")),
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(1, "missing `p vc <n> <m>` header"))?;
        if edges.len() != m {
            return Err(SourceError::Invalid(format!("header announces {m} edges, found {}", edges.len())));
        }
        let k = k.ok_or_else(|| SourceError::Invalid("missing `k <k>` line".into()))?;
        Self::new(n, edges, k)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("p vc {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        let _ = writeln!(out, "k {}", self.k);
        out
    }
}

fn check_limit(what: &'static str, value: usize) -> Result<(), SourceError> {
    if value > ORACLE_LIMIT {
        Err(SourceError::SizeLimit {
            what,
            value,
            limit: ORACLE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Indices of a subfamily covering every element exactly once, by trying
/// all `2^m` subfamilies in increasing bitmask order.
pub fn exact_cover_oracle(sys: &SetSystem) -> Result<Option<Vec<usize>>, SourceError> {
    check_limit("m", sys.sets.len())?;
    let m = sys.sets.len();
    for mask in 0u32..(1 << m) {
        let mut count = vec![0usize; sys.universe];
        for (j, s) in sys.sets.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for &x in s {
                    count[x] += 1;
                }
            }
        }
        if count.iter().all(|&c| c == 1) {
            return Ok(Some((0..m).filter(|j| mask >> j & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// A set `X` meeting every set in exactly one element, by trying all `2^n`
/// subsets of the universe.
pub fn exact_hitting_set_oracle(sys: &SetSystem) -> Result<Option<Vec<usize>>, SourceError> {
    check_limit("n", sys.universe)?;
    let n = sys.universe;
    for mask in 0u32..(1 << n) {
        if sys
            .sets
            .iter()
            .all(|s| s.iter().filter(|&&x| mask >> x & 1 == 1).count() == 1)
        {
            return Ok(Some((0..n).filter(|x| mask >> x & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// A vertex cover of size at most `k`, by trying all `2^n` vertex subsets.
pub fn vertex_cover_oracle(vc: &VcInstance) -> Result<Option<Vec<usize>>, SourceError> {
    check_limit("n", vc.n)?;
    for mask in 0u32..(1 << vc.n) {
        if mask.count_ones() as usize > vc.k {
            continue;
        }
        if vc.edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1) {
            return Ok(Some((0..vc.n).filter(|x| mask >> x & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let ec = SetSystem::new(2, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(exact_cover_oracle(&ec).unwrap(), Some(vec![0, 1]));
        let tri = VcInstance::new(3, vec![(0, 1), (1, 2), (0, 2)], 2).unwrap();
        assert!(vertex_cover_oracle(&tri).unwrap().is_some());
        let tri1 = VcInstance { k: 1, ..tri };
        assert_eq!(vertex_cover_oracle(&tri1).unwrap(), None);
        let ehs = SetSystem::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(exact_hitting_set_oracle(&ehs).unwrap(), Some(vec![0]));
        let twice = SetSystem::new(1, vec![vec![0], vec![0]]).unwrap();
        assert_eq!(exact_hitting_set_oracle(&twice).unwrap(), Some(vec![0]));
    }

    #[test]
    fn size_limit() {
        let big = SetSystem::new(1, vec![vec![0]; 21]).unwrap();
        assert!(matches!(exact_cover_oracle(&big), Err(SourceError::SizeLimit { .. })));
    }

    #[test]
    fn parse_round_trip() {
        let sys = SetSystem::parse("# demo\nu 3\n1 2\n3\n").unwrap();
        assert_eq!(sys.sets, vec![vec![0, 1], vec![2]]);
        assert_eq!(SetSystem::parse(&sys.serialize()).unwrap(), sys);
        assert!(SetSystem::parse("u 2\n3\n").is_err());
        assert!(SetSystem::parse("u 2\n1 1\n").is_err());
        let vc = VcInstance::parse("p vc 3 2\ne 1 2\ne 2 3\nk 1\n").unwrap();
        assert_eq!(vc.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(VcInstance::parse(&vc.serialize()).unwrap(), vc);
        assert!(VcInstance::parse("p vc 2 1\ne 1 1\nk 1\n").is_err());
        assert!(VcInstance::parse("p vc 2 2\ne 1 2\nk 1\n").is_err());
    }
}
