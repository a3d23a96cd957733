use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerograph::graphs::{
    generate, gnp, random_hypergraph, random_multigraph, GeneratorSpec, Hypergraph,
};

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

#[test]
fn line_graph_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let g = gnp(rng.gen_range(1..9), 0.4, &mut rng);
        let l = g.line_graph().unwrap();
        assert_eq!(l.n(), g.num_edges());
        let pairs: usize = g
            .degrees()
            .iter()
            .map(|&d| d * d.saturating_sub(1) / 2)
            .sum();
        assert_eq!(l.num_edges(), pairs);
        assert!(l.is_simple());
    }
}

#[test]
fn dual_degrees_are_edge_sizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let h = random_hypergraph(6, rng.gen_range(1..8), 4, &mut rng).unwrap();
        let d = h.dual();
        assert_eq!(
            sorted(d.degrees()),
            sorted(h.edges().iter().map(Vec::len).collect())
        );
        let clean = h.without_isolated();
        assert_eq!(clean.dual().dual(), clean);
    }
}

#[test]
fn uniformize_is_exactly_uniform() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let h = random_hypergraph(7, rng.gen_range(1..8), 4, &mut rng).unwrap();
        let (u, pad) = h.uniformize();
        assert!(u.is_uniform(h.max_edge_size()));
        assert_eq!(u.num_edges(), h.num_edges());
        assert!(pad.iter().all(|&v| v >= h.n() && u.degree(v) == 1));
    }
    let already = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    let (u, pad) = already.uniformize();
    assert_eq!(u, already);
    assert!(pad.is_empty());
}

#[test]
fn contraction_removes_one_edge() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    while done < 20 {
        let g = random_multigraph(rng.gen_range(2..7), rng.gen_range(1..10), &mut rng);
        let Some(k) = (0..g.num_edges()).find(|&k| g.endpoints(k).0 != g.endpoints(k).1) else {
            continue;
        };
        let c = g.contract_edge(k).unwrap();
        assert_eq!(c.num_edges(), g.num_edges() - 1);
        assert_eq!(c.n(), g.n() - 1);
        done += 1;
    }
}

#[test]
fn generators_are_deterministic() {
    for text in [
        "gnp:9,0.4:17",
        "random_hypergraph:8,6,3:5",
        "random_multigraph:5,9:2",
    ] {
        let spec: GeneratorSpec = text.parse().unwrap();
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a.as_hypergraph(), b.as_hypergraph(), "{text}");
    }
}
