//! Steiner triple systems, transversal designs and group divisible designs
//! of index one, with brute-force pair-coverage verifiers.
//!
//! Supported constructions:
//!
//! * STS(n), `n ≡ 3 (mod 6)`: Bose, from the idempotent commutative
//!   quasigroup `x ∘ y = (x + y) / 2` on `Z_{2t+1}`.
//! * STS(n), `n ≡ 1 (mod 6)`: Skolem, from the half-idempotent commutative
//!   quasigroup on `Z_{2t}`.
//! * TD(r, m) for prime `m >= r`, from the Latin squares `i + a j (mod m)`.
//! * GDDs of type `m^k`: transversal designs (`k = r`), complete `k`-partite
//!   graphs (`r = 2`) and Steiner triple systems with singleton groups.

use crate::error::{Error, Result};
use crate::hypercore::io::{content_lines, parse_fields, write_row};
use crate::hypercore::Hypergraph;

/// `n - 1 ≡ 0 (mod r-1)` and `n(n-1) ≡ 0 (mod r(r-1))`.
pub fn cond1(n: usize, r: usize) -> bool {
    if r < 2 || n < r {
        return false;
    }
    (n - 1).is_multiple_of(r - 1) && (n * (n - 1)).is_multiple_of(r * (r - 1))
}

/// `m(k-1) ≡ 0 (mod r-1)` and `m^2 k(k-1) ≡ 0 (mod r(r-1))`.
pub fn cond2(m: usize, k: usize, r: usize) -> bool {
    if r < 2 || k < r || m == 0 {
        return false;
    }
    (m * (k - 1)).is_multiple_of(r - 1) && (m * m * k * (k - 1)).is_multiple_of(r * (r - 1))
}

pub fn is_prime(m: usize) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
}

/// Partition of `0..n` into `k` groups of equal size `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDivision {
    groups: Vec<Vec<usize>>,
    n: usize,
}

impl GroupDivision {
    pub fn new(groups: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::Parameter(format!("invalid group division: {msg}")));
        let Some(m) = groups.first().map(Vec::len) else {
            return bad("no groups");
        };
        if m == 0 || groups.iter().any(|g| g.len() != m) {
            return bad("groups must be nonempty and of equal size");
        }
        let n = m * groups.len();
        let mut seen = vec![false; n];
        for &v in groups.iter().flatten() {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return bad("groups must partition 0..n");
            }
        }
        let mut groups = groups;
        for g in &mut groups {
            g.sort_unstable();
        }
        Ok(GroupDivision { groups, n })
    }

    /// Consecutive blocks `[0, m), [m, 2m), ...`.
    pub fn consecutive(m: usize, k: usize) -> Result<Self> {
        GroupDivision::new((0..k).map(|g| (g * m..(g + 1) * m).collect()).collect())
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group_size(&self) -> usize {
        self.groups[0].len()
    }

    pub fn k(&self) -> usize {
        self.groups.len()
    }

    pub fn group_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.n];
        for (i, g) in self.groups.iter().enumerate() {
            for &v in g {
                of[v] = i;
            }
        }
        of
    }

    /// One line per group listing its vertices.
    pub fn write(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            write_row(&mut out, g);
        }
        out
    }

    pub fn read(text: &str) -> Result<Self> {
        let groups = content_lines(text).map(|(line, l)| parse_fields(line, l)).collect::<Result<_>>()?;
        GroupDivision::new(groups)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesignKind {
    Steiner { n: usize },
    Transversal { r: usize, m: usize },
    Gdd { m: usize, k: usize, r: usize },
}

/// Parameters of an index-one design, checked against the divisibility gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignSpec {
    kind: DesignKind,
}

impl DesignSpec {
    pub fn new(kind: DesignKind) -> Result<Self> {
        let ok = match kind {
            DesignKind::Steiner { n } => cond1(n, 3),
            DesignKind::Transversal { r, m } => cond2(m, r, r),
            DesignKind::Gdd { m, k, r } => cond2(m, k, r),
        };
        if !ok {
            return Err(Error::Unsupported(format!("{kind:?} fails the divisibility conditions")));
        }
        Ok(DesignSpec { kind })
    }

    pub fn kind(&self) -> DesignKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        match self.kind {
            DesignKind::Steiner { n } => n,
            DesignKind::Transversal { r, m } => r * m,
            DesignKind::Gdd { m, k, .. } => m * k,
        }
    }

    pub fn r(&self) -> usize {
        match self.kind {
            DesignKind::Steiner { .. } => 3,
            DesignKind::Transversal { r, .. } | DesignKind::Gdd { r, .. } => r,
        }
    }

    /// Always 1.
    pub fn mu(&self) -> usize {
        1
    }

    pub fn construct(&self) -> Result<(Hypergraph, Option<GroupDivision>)> {
        match self.kind {
            DesignKind::Steiner { n } => Ok((steiner_triple_system(n)?, None)),
            DesignKind::Transversal { r, m } => transversal_design(r, m).map(|(h, g)| (h, Some(g))),
            DesignKind::Gdd { m, k, r } => gdd(m, k, r).map(|(h, g)| (h, Some(g))),
        }
    }
}

fn build(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
    Hypergraph::new(n, r, edges).expect("construction produced an invalid edge list")
}

/// Canonicalizes triples: bucket by smallest vertex, then sort each bucket.
/// Validity is checked on the sorted list.
fn build_triples(n: usize, mut edges: Vec<[usize; 3]>) -> Hypergraph {
    let mut start = vec![0usize; n + 1];
    for e in &mut edges {
        e.sort_unstable();
        assert!(e[0] < e[1] && e[1] < e[2] && e[2] < n, "construction produced an invalid edge");
        start[e[0] + 1] += 1;
    }
    for v in 0..n {
        start[v + 1] += start[v];
    }
    let bounds = start.clone();
    let mut sorted = vec![[0; 3]; edges.len()];
    for e in &edges {
        sorted[start[e[0]]] = *e;
        start[e[0]] += 1;
    }
    for v in 0..n {
        sorted[bounds[v]..bounds[v + 1]].sort_unstable();
    }
    assert!(sorted.windows(2).all(|w| w[0] != w[1]), "construction produced a repeated edge");
    Hypergraph::from_canonical(n, 3, sorted.as_flattened().to_vec())
}

/// A 2-(n,3,1) design for `n ≡ 1, 3 (mod 6)`; `n = 3` is the single triple.
pub fn steiner_triple_system(n: usize) -> Result<Hypergraph> {
    match n % 6 {
        _ if n == 1 => Err(Error::Unsupported("a Steiner triple system needs at least 3 points".into())),
        3 => Ok(bose(n)),
        1 => Ok(skolem(n)),
        _ => Err(Error::Unsupported(format!("Steiner triple systems need n ≡ 1 or 3 (mod 6), got n = {n}"))),
    }
}

/// Points `(x, i)` with `x` in `Z_v`, `i` in `Z_3` are numbered `x + i v`.
fn bose(n: usize) -> Hypergraph {
    let v = n / 3;
    let half = v.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % v;
    let pt = |x: usize, i: usize| x + (i % 3) * v;
    let mut edges = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..v {
        edges.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..v {
            for y in x + 1..v {
                edges.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    build_triples(n, edges)
}

/// Points `(x, i)` with `x` in `Z_{2t}` numbered `x + 2t i`, plus the point
/// at infinity `6t`.
fn skolem(n: usize) -> Hypergraph {
    let t = (n - 1) / 6;
    let v = 2 * t;
    let inf = 3 * v;
    // half-idempotent: x ∘ x = (x + t) ∘ (x + t) = x for x < t
    let op = |x: usize, y: usize| {
        let s = (x + y) % v;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            (s - 1) / 2 + t
        }
    };
    let pt = |x: usize, i: usize| x + (i % 3) * v;
    let mut edges = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..t {
        edges.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            edges.push([inf, pt(x + t, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..v {
            for y in x + 1..v {
                edges.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    build_triples(n, edges)
}

/// TD(r, m) for prime `m >= r`: group `g` holds vertices `g m .. (g+1) m`,
/// and block `(i, j)` meets group 0 at `i`, group 1 at `j` and group `g >= 2`
/// at `i + (g - 1) j (mod m)`.
pub fn transversal_design(r: usize, m: usize) -> Result<(Hypergraph, GroupDivision)> {
    if r < 2 {
        return Err(Error::Parameter(format!("block size must be at least 2, got {r}")));
    }
    if m < r {
        return Err(Error::Parameter(format!("group size {m} is smaller than block size {r}")));
    }
    if !is_prime(m) {
        return Err(Error::Unsupported(format!("transversal designs are built over prime fields only, {m} is not prime")));
    }
    let local = |g: usize, i: usize, j: usize| match g {
        0 => i,
        1 => j,
        _ => (i + (g - 1) * j) % m,
    };
    let edges = (0..m)
        .flat_map(|i| (0..m).map(move |j| (0..r).map(|g| g * m + local(g, i, j)).collect()))
        .collect();
    Ok((build(r * m, r, edges), GroupDivision::consecutive(m, r)?))
}

/// Group divisible design of type `m^k`, block size `r`, index 1, for the
/// three supported families.
pub fn gdd(m: usize, k: usize, r: usize) -> Result<(Hypergraph, GroupDivision)> {
    if k == r && is_prime(m) && m >= r {
        return transversal_design(r, m);
    }
    if r == 2 && k >= 2 && m >= 1 {
        let groups = GroupDivision::consecutive(m, k)?;
        let of = groups.group_of();
        let n = m * k;
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b])).filter(|e| of[e[0]] != of[e[1]]).collect();
        return Ok((build(n, 2, edges), groups));
    }
    if r == 3 && m == 1 && k >= 7 && matches!(k % 6, 1 | 3) {
        return Ok((steiner_triple_system(k)?, GroupDivision::consecutive(1, k)?));
    }
    Err(Error::Unsupported(format!(
        "no construction for group type {m}^{k} with block size {r} (supported: k = r with prime m >= r; r = 2; r = 3 with m = 1)"
    )))
}

/// Number of edges containing each pair `(a, b)`, `a < b`, indexed `a n + b`.
fn pair_counts(h: &Hypergraph) -> Vec<u32> {
    let n = h.n();
    let mut counts = vec![0u32; n * n];
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                counts[a * n + b] += 1;
            }
        }
    }
    counts
}

/// Every pair of points lies in exactly one block.
pub fn verify_design(h: &Hypergraph) -> bool {
    let n = h.n();
    let counts = pair_counts(h);
    (0..n).all(|a| (a + 1..n).all(|b| counts[a * n + b] == 1))
}

/// Blocks meet each group at most once, within-group pairs are uncovered and
/// cross-group pairs are covered exactly once.
pub fn verify_gdd(h: &Hypergraph, groups: &GroupDivision) -> bool {
    if groups.n() != h.n() {
        return false;
    }
    let of = groups.group_of();
    let transversal = h.edges().all(|e| {
        let mut hit: Vec<usize> = e.iter().map(|&v| of[v]).collect();
        hit.sort_unstable();
        hit.windows(2).all(|w| w[0] != w[1])
    });
    let n = h.n();
    let counts = pair_counts(h);
    transversal
        && (0..n).all(|a| (a + 1..n).all(|b| counts[a * n + b] == u32::from(of[a] != of[b])))
}
