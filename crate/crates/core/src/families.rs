//! Named graph families with their analytically known invariants.
//!
//! Vertices are numbered deterministically: multipartite graphs place their
//! parts contiguously (larger Turán parts first), kites put the clique on
//! `0..w` and hang the path off vertex `w - 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete `t`-partite graph on `n` vertices with part sizes `k` or `k + 1`.
pub fn turan(n: usize, t: usize) -> Result<Graph> {
    complete_multipartite(&turan_parts(n, t)?)
}

/// Part sizes of `T(n, t)`, larger parts first.
pub fn turan_parts(n: usize, t: usize) -> Result<Vec<usize>> {
    if t == 0 || t > n {
        return Err(Error::invalid(format!("Turán graph needs 1 <= t <= n, got n={n}, t={t}")));
    }
    let (k, r) = (n / t, n % t);
    Ok((0..t).map(|i| if i < r { k + 1 } else { k }).collect())
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::invalid("complete multipartite graph needs at least one part"));
    }
    if let Some(pos) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::invalid(format!("part {pos} is empty")));
    }
    let mut g = Graph::empty(sizes[0])?;
    for &s in &sizes[1..] {
        g = g.join(&Graph::empty(s)?)?;
    }
    Ok(g)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    complete_multipartite(&[p, q])
}

/// `K_w` with a pendant path on the remaining `n - w` vertices attached to
/// clique vertex `w - 1`. `kite(n, 2)` is the path `P_n`.
pub fn kite(n: usize, w: usize) -> Result<Graph> {
    if w < 2 || w > n {
        return Err(Error::invalid(format!("kite needs 2 <= w <= n, got n={n}, w={w}")));
    }
    let mut edges = Vec::new();
    for j in 1..w {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    for v in w..n {
        edges.push((v - 1, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// Perfect matching `{0,1}, {2,3}, ...` on an even number of vertices.
pub fn perfect_matching(n: usize) -> Result<Graph> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::invalid(format!("perfect matching needs a positive even order, got {n}")));
    }
    let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Complement of a perfect matching: `(n - 2)`-regular, clique number `n / 2`.
pub fn complement_perfect_matching(n: usize) -> Result<Graph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::invalid(format!("complement of a perfect matching needs even n >= 2, got {n}")));
    }
    Ok(perfect_matching(n)?.complement())
}

/// Complement of a perfect matching on `n - 3` vertices together with a
/// triangle on the last three, read as the complement of the whole union.
pub fn cpm_plus_triangle(n: usize) -> Result<Graph> {
    Ok(matching_plus_triangle(n)?.complement())
}

/// The other reading of the same phrase: the complement of a perfect
/// matching on `n - 3` vertices with a disjoint triangle beside it. This
/// graph is disconnected.
pub fn cpm_beside_triangle(n: usize) -> Result<Graph> {
    check_odd(n)?;
    complement_perfect_matching(n - 3)?.union(&Graph::complete(3)?)
}

fn matching_plus_triangle(n: usize) -> Result<Graph> {
    check_odd(n)?;
    perfect_matching(n - 3)?.union(&Graph::complete(3)?)
}

fn check_odd(n: usize) -> Result<()> {
    if n < 5 || n % 2 == 0 {
        Err(Error::invalid(format!("needs odd n >= 5, got {n}")))
    } else {
        Ok(())
    }
}

/// `p` independent vertices joined to a path on `q` vertices. With `p = 3`,
/// `q = 4` this is a seven-vertex graph on which the Yu degree bound beats
/// the clique bound.
pub fn empty_join_path(p: usize, q: usize) -> Result<Graph> {
    Graph::empty(p)?.join(&path(q)?)
}

/// Parametric descriptor of a named family, parsed from strings such as
/// `turan:10,3` or `multipartite:4,3,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Turan { n: usize, t: usize },
    CompleteMultipartite(Vec<usize>),
    Kite { n: usize, w: usize },
    Path(usize),
    CompleteBipartite { p: usize, q: usize },
    Complete(usize),
    Empty(usize),
    ComplementPerfectMatching(usize),
    CpmPlusTriangle(usize),
    EmptyJoinPath { p: usize, q: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Turan { n, t } => turan(n, t),
            FamilySpec::CompleteMultipartite(ref sizes) => complete_multipartite(sizes),
            FamilySpec::Kite { n, w } => kite(n, w),
            FamilySpec::Path(n) => path(n),
            FamilySpec::CompleteBipartite { p, q } => complete_bipartite(p, q),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Empty(n) => empty(n),
            FamilySpec::ComplementPerfectMatching(n) => complement_perfect_matching(n),
            FamilySpec::CpmPlusTriangle(n) => cpm_plus_triangle(n),
            FamilySpec::EmptyJoinPath { p, q } => empty_join_path(p, q),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Turan { n, .. }
            | FamilySpec::Kite { n, .. }
            | FamilySpec::Path(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::ComplementPerfectMatching(n)
            | FamilySpec::CpmPlusTriangle(n) => n,
            FamilySpec::CompleteMultipartite(ref sizes) => sizes.iter().sum(),
            FamilySpec::CompleteBipartite { p, q } | FamilySpec::EmptyJoinPath { p, q } => p + q,
        }
    }

    /// Clique number known from the construction.
    pub fn clique_number(&self) -> usize {
        match *self {
            FamilySpec::Turan { t, .. } => t,
            FamilySpec::CompleteMultipartite(ref sizes) => sizes.len(),
            FamilySpec::Kite { w, .. } => w,
            FamilySpec::Path(n) => n.min(2),
            FamilySpec::CompleteBipartite { .. } => 2,
            FamilySpec::Complete(n) => n,
            FamilySpec::Empty(_) => 1,
            FamilySpec::ComplementPerfectMatching(n) => n / 2,
            FamilySpec::CpmPlusTriangle(n) => (n - 3) / 2 + 1,
            FamilySpec::EmptyJoinPath { q, .. } => 1 + q.min(2),
        }
    }

    /// Chromatic number known from the construction; these families are
    /// perfect, so it coincides with the clique number.
    pub fn chromatic_number(&self) -> usize {
        self.clique_number()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Turan { n, t } => write!(f, "turan:{n},{t}"),
            FamilySpec::CompleteMultipartite(sizes) => {
                let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            FamilySpec::Kite { n, w } => write!(f, "kite:{n},{w}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::CompleteBipartite { p, q } => write!(f, "kpq:{p},{q}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::ComplementPerfectMatching(n) => write!(f, "cpm:{n}"),
            FamilySpec::CpmPlusTriangle(n) => write!(f, "cpmtri:{n}"),
            FamilySpec::EmptyJoinPath { p, q } => write!(f, "joinpath:{p},{q}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("family `{s}` should look like kind:args")))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse(format!("family `{s}` has a non-integer argument")))?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::parse(format!("family `{kind}` takes {k} argument(s), got {}", nums.len())))
            }
        };
        let spec = match kind {
            "turan" => arity(2).map(|_| FamilySpec::Turan { n: nums[0], t: nums[1] }),
            "kite" => arity(2).map(|_| FamilySpec::Kite { n: nums[0], w: nums[1] }),
            "kpq" => arity(2).map(|_| FamilySpec::CompleteBipartite { p: nums[0], q: nums[1] }),
            "joinpath" => arity(2).map(|_| FamilySpec::EmptyJoinPath { p: nums[0], q: nums[1] }),
            "path" => arity(1).map(|_| FamilySpec::Path(nums[0])),
            "complete" => arity(1).map(|_| FamilySpec::Complete(nums[0])),
            "empty" => arity(1).map(|_| FamilySpec::Empty(nums[0])),
            "cpm" => arity(1).map(|_| FamilySpec::ComplementPerfectMatching(nums[0])),
            "cpmtri" => arity(1).map(|_| FamilySpec::CpmPlusTriangle(nums[0])),
            "multipartite" => Ok(FamilySpec::CompleteMultipartite(nums.clone())),
            _ => Err(Error::parse(format!("unknown family `{kind}`"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        self.build().map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_layout() {
        assert_eq!(turan_parts(10, 3).unwrap(), vec![4, 3, 3]);
        let t = turan(10, 3).unwrap();
        assert_eq!(t.m(), 33);
        assert_eq!(t, complete_multipartite(&[4, 3, 3]).unwrap());
        let e = |n| Graph::empty(n).unwrap();
        assert_eq!(t, e(4).join(&e(3).join(&e(3)).unwrap()).unwrap());
        assert_eq!(turan(5, 5).unwrap(), Graph::complete(5).unwrap());
        assert!(turan(3, 4).is_err());
        assert!(turan(3, 0).is_err());
    }

    #[test]
    fn matching_complements() {
        let k222 = turan(6, 3).unwrap();
        assert_eq!(complement_perfect_matching(6).unwrap(), k222);
        assert_eq!(perfect_matching(6).unwrap().complement(), k222);
        let c4 = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(complement_perfect_matching(4).unwrap(), c4);
        assert!(complement_perfect_matching(5).is_err());
        let g = complement_perfect_matching(8).unwrap();
        assert_eq!(g.regular_degree(), Some(6));
        assert_eq!(g.clique_number(), 4);
    }

    #[test]
    fn cpm_triangle_readings() {
        // complement of K2 + K3 is K_{2,3}
        assert_eq!(cpm_plus_triangle(5).unwrap(), complete_bipartite(2, 3).unwrap());
        let g9 = cpm_plus_triangle(9).unwrap();
        let oracle = perfect_matching(6).unwrap().union(&Graph::complete(3).unwrap()).unwrap().complement();
        assert_eq!(g9, oracle);
        let mut d = g9.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![6, 6, 6, 7, 7, 7, 7, 7, 7]);
        assert_eq!(g9.clique_number(), 4);
        assert!(g9.is_connected());
        assert!(!cpm_beside_triangle(9).unwrap().is_connected());
        assert!(cpm_plus_triangle(8).is_err());
    }

    #[test]
    fn kites() {
        let k43 = kite(4, 3).unwrap();
        assert_eq!(k43.m(), 4);
        assert_eq!(k43.degrees(), vec![2, 2, 3, 1]);
        assert_eq!(kite(6, 2).unwrap(), path(6).unwrap());
        let k74 = kite(7, 4).unwrap();
        assert_eq!(k74.m(), 9);
        assert_eq!(k74.clique_number(), 4);
        assert!(k74.is_connected());
        assert_eq!(kite(5, 5).unwrap(), Graph::complete(5).unwrap());
        assert!(kite(4, 1).is_err());
        assert!(kite(4, 5).is_err());
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(path(2).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(complete(3).unwrap().m(), 3);
        assert_eq!(empty(1).unwrap(), Graph::complete(1).unwrap());
        assert_eq!(complete_multipartite(&[1, 1, 1, 1]).unwrap(), Graph::complete(4).unwrap());
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        let g = empty_join_path(3, 4).unwrap();
        assert_eq!(g.degree_profile().degrees, vec![5, 5, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn spec_strings() {
        let cases = [
            ("turan:10,3", FamilySpec::Turan { n: 10, t: 3 }),
            ("kite:7,4", FamilySpec::Kite { n: 7, w: 4 }),
            ("kpq:2,3", FamilySpec::CompleteBipartite { p: 2, q: 3 }),
            ("path:5", FamilySpec::Path(5)),
            ("complete:4", FamilySpec::Complete(4)),
            ("cpm:8", FamilySpec::ComplementPerfectMatching(8)),
            ("cpmtri:9", FamilySpec::CpmPlusTriangle(9)),
            ("multipartite:4,3,3", FamilySpec::CompleteMultipartite(vec![4, 3, 3])),
            ("joinpath:3,4", FamilySpec::EmptyJoinPath { p: 3, q: 4 }),
        ];
        for (text, spec) in cases {
            let parsed: FamilySpec = text.parse().unwrap();
            assert_eq!(parsed, spec);
            assert_eq!(parsed.to_string(), text);
            let g = parsed.build().unwrap();
            assert_eq!(g.n(), parsed.order());
            assert_eq!(g.clique_number(), parsed.clique_number(), "{text}");
            assert_eq!(g.chromatic_number().unwrap(), parsed.chromatic_number(), "{text}");
        }
        for bad in ["turan:3", "turan:3,4", "kite:4,1", "cpm:5", "what:1", "path", "path:x"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
