use super::*;
use crate::model::{Coloring, EdgeSet, HostGraph};

fn host(n: u32, s: u32) -> HostGraph {
    HostGraph::new(n, s).unwrap()
}

fn edge(h: &HostGraph, vs: &[u32]) -> Edge {
    h.edge(vs.to_vec()).unwrap()
}

fn witness(kind: MotifKind, edges: Vec<Edge>, defining: Vec<u32>) -> Witness {
    Witness { kind, k: edges.len() as u32, edges, defining_vertices: defining, colors: Vec::new() }
}

fn spec(kind: MotifKind, k: u32) -> MotifSpec {
    MotifSpec::new(kind, k).unwrap()
}

#[test]
fn motif_names_round_trip() {
    for kind in MotifKind::ALL {
        assert_eq!(kind.name().parse::<MotifKind>().unwrap(), kind);
        let json = serde_json::to_string(&kind).unwrap();
        assert_eq!(json, format!("\"{}\"", kind.name()));
    }
    assert!("zigzag".parse::<MotifKind>().is_err());
}

#[test]
fn spec_rejects_degenerate_lengths() {
    assert!(MotifSpec::new(MotifKind::LinearPath, 0).is_err());
    assert!(MotifSpec::new(MotifKind::LooseCycle, 2).is_err());
    assert!(MotifSpec::new(MotifKind::BergeCycle, 3).is_ok());
    assert!(MotifSpec::new(MotifKind::BergePath, 6).unwrap().validate_for(&host(5, 3)).is_err());
}

#[test]
fn verify_linear_and_loose_pairs() {
    let h = host(6, 3);
    let w = witness(MotifKind::LinearPath, vec![edge(&h, &[0, 1, 2]), edge(&h, &[2, 3, 4])], vec![]);
    assert!(verify_witness(&w, spec(MotifKind::LinearPath, 2), None).unwrap());

    let w = witness(MotifKind::LoosePath, vec![edge(&h, &[0, 1, 2]), edge(&h, &[1, 2, 3])], vec![]);
    assert!(!verify_witness(&w, spec(MotifKind::LinearPath, 2), None).unwrap());
    assert!(verify_witness(&w, spec(MotifKind::LoosePath, 2), None).unwrap());
}

#[test]
fn verify_berge_pair() {
    let h = host(5, 3);
    let w = witness(MotifKind::BergePath, vec![edge(&h, &[0, 1, 2]), edge(&h, &[1, 2, 3])], vec![0, 1, 3]);
    assert!(verify_witness(&w, spec(MotifKind::BergePath, 2), None).unwrap());
    let bad = Witness { defining_vertices: vec![0, 3, 1], ..w };
    assert!(!verify_witness(&bad, spec(MotifKind::BergePath, 2), None).unwrap());
}

#[test]
fn verify_rejects_mismatched_k() {
    let h = host(6, 3);
    let w = witness(MotifKind::LinearPath, vec![edge(&h, &[0, 1, 2])], vec![]);
    assert!(verify_witness(&w, spec(MotifKind::LinearPath, 2), None).is_err());
}

#[test]
fn three_cycles_exclude_stars() {
    let h = host(7, 3);
    let star = vec![edge(&h, &[0, 1, 2]), edge(&h, &[0, 3, 4]), edge(&h, &[0, 5, 6])];
    assert!(!verify_witness(&witness(MotifKind::LinearCycle, star, vec![]), spec(MotifKind::LinearCycle, 3), None).unwrap());
    let tri = vec![edge(&h, &[0, 1, 2]), edge(&h, &[2, 3, 4]), edge(&h, &[4, 5, 0])];
    assert!(verify_witness(&witness(MotifKind::LinearCycle, tri, vec![]), spec(MotifKind::LinearCycle, 3), None).unwrap());
}

#[test]
fn verify_checks_rainbow_colors() {
    let h = host(5, 3);
    let w = witness(MotifKind::LoosePath, vec![edge(&h, &[0, 1, 2]), edge(&h, &[2, 3, 4])], vec![]);
    let mono = Coloring::monochromatic(h).unwrap();
    assert!(!verify_witness(&w, spec(MotifKind::LoosePath, 2), Some(&mono)).unwrap());
    let distinct = Coloring::all_distinct(h).unwrap();
    assert!(verify_witness(&w, spec(MotifKind::LoosePath, 2), Some(&distinct)).unwrap());
}

#[test]
fn classify_cross_and_free() {
    let h = host(6, 3);
    let w = witness(MotifKind::LinearPath, vec![edge(&h, &[0, 1, 2]), edge(&h, &[2, 3, 4])], vec![]);
    let roles = classify_vertices(&w);
    assert_eq!(roles[&2], VertexRole::Cross);
    for v in [0, 1, 3, 4] {
        assert_eq!(roles[&v], VertexRole::Free);
    }
    let tri = witness(
        MotifKind::LinearCycle,
        vec![edge(&h, &[0, 1, 2]), edge(&h, &[2, 3, 4]), edge(&h, &[4, 5, 0])],
        vec![],
    );
    let cross = classify_vertices(&tri).values().filter(|r| **r == VertexRole::Cross).count();
    assert_eq!(cross, 3);
}

#[test]
fn find_copy_examples() {
    let k5 = EdgeSet::complete(host(5, 3)).unwrap();
    let w = find_copy(&k5, spec(MotifKind::LinearPath, 2)).unwrap().unwrap();
    assert!(verify_witness(&w, spec(MotifKind::LinearPath, 2), None).unwrap());
    // Least first edge {0,1,2}; least partner meeting it in one vertex is {0,3,4}.
    assert_eq!(w.edges[0].vertices(), &[0, 1, 2]);
    assert_eq!(w.edges[1].vertices(), &[0, 3, 4]);

    let k4 = EdgeSet::complete(host(4, 3)).unwrap();
    assert!(find_copy(&k4, spec(MotifKind::LinearPath, 2)).unwrap().is_none());

    let h = host(6, 3);
    let star = EdgeSet::from_edges(h, h.edges_meeting(&h.vertex_set(vec![0]).unwrap()).collect::<Vec<_>>().iter()).unwrap();
    assert!(find_copy(&star, spec(MotifKind::Matching, 2)).unwrap().is_none());
}

#[test]
fn find_rainbow_examples() {
    let h = host(6, 3);
    let mono = Coloring::monochromatic(h).unwrap();
    for kind in MotifKind::ALL {
        assert!(find_rainbow(&mono, spec(kind, 3)).unwrap().is_none(), "{kind}");
    }
    let distinct = Coloring::all_distinct(h).unwrap();
    let w = find_rainbow(&distinct, spec(MotifKind::LinearPath, 2)).unwrap().unwrap();
    assert!(verify_witness(&w, spec(MotifKind::LinearPath, 2), Some(&distinct)).unwrap());
}

#[test]
fn single_edge_motifs() {
    let h = host(5, 3);
    let c = Coloring::all_distinct(h).unwrap();
    for kind in [MotifKind::LinearPath, MotifKind::LoosePath, MotifKind::BergePath, MotifKind::Matching] {
        let w = find_rainbow(&c, spec(kind, 1)).unwrap().unwrap();
        assert_eq!(w.edges.len(), 1);
        assert!(verify_witness(&w, spec(kind, 1), Some(&c)).unwrap());
        assert!(find_rainbow_naive(&c, spec(kind, 1), DEFAULT_NAIVE_BUDGET).unwrap().is_some());
    }
}

#[test]
fn berge_witnesses_verify() {
    let h = host(7, 3);
    let c = Coloring::all_distinct(h).unwrap();
    for (kind, k) in [(MotifKind::BergePath, 5), (MotifKind::BergeCycle, 4), (MotifKind::BergeCycle, 7)] {
        let w = find_rainbow(&c, spec(kind, k)).unwrap().unwrap();
        assert!(verify_witness(&w, spec(kind, k), Some(&c)).unwrap(), "{kind} {k}");
    }
}

#[test]
fn linear_path_reads_as_berge() {
    let h = host(9, 3);
    let c = Coloring::all_distinct(h).unwrap();
    let w = find_rainbow(&c, spec(MotifKind::LinearPath, 4)).unwrap().unwrap();
    let b = w.as_berge_path().unwrap();
    assert!(verify_witness(&b, spec(MotifKind::BergePath, 4), Some(&c)).unwrap());
    assert!(verify_witness(&w, spec(MotifKind::LoosePath, 4), Some(&c)).unwrap());
}

#[test]
fn sequential_and_parallel_agree() {
    let h = host(8, 3);
    let colors: Vec<u32> = (0..56u32).map(|r| (r * 7) % 5).collect();
    let c = Coloring::new(h, colors).unwrap();
    for kind in MotifKind::ALL {
        for k in kind.min_k()..=4 {
            let m = spec(kind, k);
            let a = find_rainbow_with(&c, m, Execution::Sequential).unwrap();
            let b = find_rainbow_with(&c, m, Execution::Parallel).unwrap();
            assert_eq!(a, b, "{m}");
        }
    }
}

#[test]
fn scratch_witness_is_lex_least() {
    // Compare against the least witness found by brute force over ordered
    // tuples in rank order.
    let h = host(6, 3);
    let colors: Vec<u32> = (0..20u32).map(|r| (r * 3) % 4).collect();
    let c = Coloring::new(h, colors).unwrap();
    for kind in MotifKind::ALL {
        let m = spec(kind, 3);
        let fast = find_rainbow(&c, m).unwrap().map(|w| ranks(&h, &w));
        let slow = find_rainbow_naive(&c, m, DEFAULT_NAIVE_BUDGET).unwrap().map(|w| ranks(&h, &w));
        assert_eq!(fast, slow, "{m}");
    }
}

fn ranks(h: &HostGraph, w: &Witness) -> Vec<u64> {
    w.edges.iter().map(|e| h.edge_rank(e).unwrap()).collect()
}
