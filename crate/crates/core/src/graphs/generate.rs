//! Named and seeded random families.

use super::{Graph, Hypergraph};
use crate::error::{Error, Result};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Generated {
    pub fn as_hypergraph(&self) -> &Hypergraph {
        match self {
            Generated::Graph(g) => g.as_hypergraph(),
            Generated::Hypergraph(h) => h,
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        match self {
            Generated::Graph(g) => Ok(g),
            Generated::Hypergraph(h) => Graph::from_hypergraph(h),
        }
    }
}

/// `NAME[:PARAMS[:SEED]]` with comma separated parameters, e.g.
/// `complete:4`, `gnp:8,0.5:7`, `random_uniform_hypergraph:9,6,3:1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub name: String,
    pub params: Vec<String>,
    pub seed: u64,
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.splitn(3, ':');
        let name = parts.next().unwrap_or_default().trim().to_string();
        if name.is_empty() {
            return Err(Error::Parse(format!("empty generator name in {s:?}")));
        }
        let params = match parts.next() {
            Some(p) if !p.trim().is_empty() => p.split(',').map(|x| x.trim().to_string()).collect(),
            _ => Vec::new(),
        };
        let seed = match parts.next() {
            Some(x) => x
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("seed {x:?}: {e}")))?,
            None => 0,
        };
        Ok(GeneratorSpec { name, params, seed })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.name, self.params.join(","), self.seed)
    }
}

impl GeneratorSpec {
    fn int(&self, i: usize) -> Result<usize> {
        let raw = self
            .params
            .get(i)
            .ok_or_else(|| Error::Invalid(format!("{} needs parameter #{}", self.name, i + 1)))?;
        raw.parse()
            .map_err(|e| Error::Invalid(format!("{}: parameter {raw:?}: {e}", self.name)))
    }

    fn prob(&self, i: usize) -> Result<f64> {
        let raw = self
            .params
            .get(i)
            .ok_or_else(|| Error::Invalid(format!("{} needs parameter #{}", self.name, i + 1)))?;
        let p: f64 = raw
            .parse()
            .map_err(|e| Error::Invalid(format!("{}: parameter {raw:?}: {e}", self.name)))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Invalid(format!("probability {p} not in [0, 1]")));
        }
        Ok(p)
    }
}

fn positive(n: usize, what: &str) -> Result<usize> {
    if n < 1 {
        Err(Error::Invalid(format!("{what} must be at least 1")))
    } else {
        Ok(n)
    }
}

/// Build the family member described by `spec`. Deterministic in the
/// spec, including the seed.
pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.name.as_str() {
        "path" => Generated::Graph(path(positive(spec.int(0)?, "n")?)),
        "cycle" => Generated::Graph(cycle(spec.int(0)?)?),
        "complete" => Generated::Graph(complete(positive(spec.int(0)?, "n")?)),
        "star" => Generated::Graph(star(spec.int(0)?)),
        "complete_bipartite" => Generated::Graph(complete_bipartite(
            positive(spec.int(0)?, "a")?,
            positive(spec.int(1)?, "b")?,
        )),
        "gnp" => Generated::Graph(gnp(positive(spec.int(0)?, "n")?, spec.prob(1)?, &mut rng)),
        "fig3a" | "claw_free_a" => Generated::Graph(claw_free_a()),
        "fig3b" | "claw_free_b" => Generated::Graph(claw_free_b()),
        "random_hypergraph" => Generated::Hypergraph(random_hypergraph(
            positive(spec.int(0)?, "n")?,
            spec.int(1)?,
            positive(spec.int(2)?, "k")?,
            &mut rng,
        )?),
        "random_uniform_hypergraph" => Generated::Hypergraph(random_uniform_hypergraph(
            positive(spec.int(0)?, "n")?,
            spec.int(1)?,
            positive(spec.int(2)?, "k")?,
            &mut rng,
        )?),
        "random_multigraph" => Generated::Graph(random_multigraph(
            positive(spec.int(0)?, "n")?,
            spec.int(1)?,
            &mut rng,
        )),
        other => return Err(Error::Invalid(format!("unknown generator {other:?}"))),
    };
    Ok(g)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path edges are in range")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).expect("complete graph edges are in range")
}

/// Star with `leaves` leaves around centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are in range")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::new(a + b, &edges).expect("bipartite edges are in range")
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("gnp edges are in range")
}

/// `m` edges, each on a uniformly random size in `1..=k` of distinct vertices.
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, k: usize, rng: &mut R) -> Result<Hypergraph> {
    if k > n {
        return Err(Error::Invalid(format!(
            "edge size {k} exceeds {n} vertices"
        )));
    }
    let edges = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=k);
            sample(rng, n, size).into_vec()
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// `m` edges, each on `k` distinct vertices.
pub fn random_uniform_hypergraph<R: Rng>(
    n: usize,
    m: usize,
    k: usize,
    rng: &mut R,
) -> Result<Hypergraph> {
    if k > n {
        return Err(Error::Invalid(format!(
            "edge size {k} exceeds {n} vertices"
        )));
    }
    let edges = (0..m).map(|_| sample(rng, n, k).into_vec()).collect();
    Hypergraph::new(n, edges)
}

/// Simple graph with exactly `m` distinct edges chosen uniformly.
pub fn random_simple_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    if m > pairs.len() {
        return Err(Error::Invalid(format!(
            "{m} edges do not fit on {n} vertices"
        )));
    }
    let mut picked: Vec<usize> = sample(rng, pairs.len(), m).into_vec();
    picked.sort_unstable();
    let edges: Vec<_> = picked.into_iter().map(|i| pairs[i]).collect();
    Graph::new(n, &edges)
}

/// Connected simple graph: a random recursive tree on `n` vertices plus
/// `extra` further distinct edges (fewer if the graph fills up).
pub fn random_connected_graph<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Invalid("a connected graph needs a vertex".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|e| !edges.contains(e))
        .collect();
    for _ in 0..extra.min(missing.len()) {
        let i = rng.gen_range(0..missing.len());
        edges.push(missing.swap_remove(i));
    }
    Graph::new(n, &edges)
}

/// `m` edges with independently uniform endpoints, so loops and parallel
/// edges both occur.
pub fn random_multigraph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Graph::new(n, &edges).expect("multigraph endpoints are in range")
}

fn labelled(n: usize, names: &[&str], edges: &[(&str, &str)]) -> Graph {
    let id = |s: &str| names.iter().position(|&x| x == s).expect("known label");
    let e: Vec<_> = edges.iter().map(|&(a, b)| (id(a), id(b))).collect();
    let h = Graph::new(n, &e)
        .expect("labelled edges are in range")
        .into_hypergraph()
        .with_labels(names.iter().map(|s| s.to_string()).collect())
        .expect("one label per vertex");
    Graph::from_hypergraph(h).expect("all edges have two ends")
}

/// Claw-free graph on six vertices: two pendant paths hanging off a
/// diamond. Its max-cut polynomial is `λ²(1+λ²)`.
pub fn claw_free_a() -> Graph {
    labelled(
        6,
        &["w1", "w2", "e1", "e2", "u1", "u2"],
        &[
            ("w2", "w1"),
            ("w1", "u1"),
            ("w1", "u2"),
            ("e2", "e1"),
            ("e1", "u1"),
            ("e1", "u2"),
            ("u1", "u2"),
        ],
    )
}

/// Claw-free graph on six vertices: three disjoint edges, with the middle
/// pair joined to all four outer vertices. Its max-cut polynomial is
/// also `λ²(1+λ²)`.
pub fn claw_free_b() -> Graph {
    let names = ["w0", "w1", "m0", "m1", "e0", "e1"];
    let mut edges = vec![("w0", "w1"), ("m0", "m1"), ("e0", "e1")];
    for outer in ["w0", "w1", "e0", "e1"] {
        for mid in ["m0", "m1"] {
            edges.push((outer, mid));
        }
    }
    labelled(6, &names, &edges)
}
