use num_rational::BigRational;

use super::*;
use crate::model::{Edge, VertexSet};
use crate::motif::{find_rainbow, MotifSpec};

fn host(n: u32, s: u32) -> HostGraph {
    HostGraph::new(n, s).unwrap()
}

fn c(n: u64, k: u64) -> usize {
    crate::binom::checked(n, k).unwrap() as usize
}

fn edge(vs: &[u32]) -> Edge {
    Edge::from_vertices(vs.to_vec()).unwrap()
}

#[test]
fn family_sizes() {
    assert_eq!(build_family(host(10, 3), FamilySpec::Star { t: 1 }).unwrap().len(), 36);
    assert_eq!(build_family(host(10, 3), FamilySpec::StarPlusEdge { t: 2 }).unwrap().len(), 65);
    assert_eq!(build_family(host(10, 4), FamilySpec::PairBook).unwrap().len(), 28);
    // Book on {2,3} outside S = {0,1}: C(6,1) edges of K_8^(3) avoiding S.
    let book = build_family(host(8, 3), FamilySpec::StarPlusBook { t: 2 }).unwrap();
    assert_eq!(book.len(), c(8, 3) - c(6, 3) + 4);
    let matching = build_family(host(9, 3), FamilySpec::StarPlusMatching { t: 1, count: 2 }).unwrap();
    assert_eq!(matching.len(), c(9, 3) - c(8, 3) + 2);
    assert!(matching.contains(&edge(&[1, 2, 3])));
    assert!(matching.contains(&edge(&[4, 5, 6])));
    let cliques = build_family(host(9, 3), FamilySpec::DisjointCliques { block: 4 }).unwrap();
    assert_eq!(cliques.len(), 8);
}

#[test]
fn families_match_their_definitions() {
    let h = host(9, 3);
    for t in 1..=3u32 {
        let star = build_family(h, FamilySpec::Star { t }).unwrap();
        for e in h.edges() {
            assert_eq!(star.contains(&e), e.vertices().iter().any(|&v| v < t));
        }
        let plus = build_family(h, FamilySpec::StarPlusEdge { t }).unwrap();
        let extra = edge(&[t, t + 1, t + 2]);
        for e in h.edges() {
            assert_eq!(plus.contains(&e), star.contains(&e) || e == extra);
        }
    }
}

#[test]
fn infeasible_families_are_rejected() {
    assert!(build_family(host(5, 3), FamilySpec::StarPlusEdge { t: 3 }).is_err());
    assert!(build_family(host(5, 3), FamilySpec::DisjointCliques { block: 2 }).is_err());
    assert!(build_family(host(7, 3), FamilySpec::StarPlusMatching { t: 1, count: 3 }).is_err());
}

#[test]
fn family_spec_json_is_tagged() {
    let spec = FamilySpec::StarPlusMatching { t: 2, count: 1 };
    let text = serde_json::to_string(&spec).unwrap();
    assert_eq!(text, r#"{"family":"star-plus-matching","t":2,"count":1}"#);
    assert_eq!(serde_json::from_str::<FamilySpec>(&text).unwrap(), spec);
}

#[test]
fn rainbow_plus_one_examples() {
    let h = host(10, 3);
    let star = build_family(h, FamilySpec::Star { t: 1 }).unwrap();
    let col = rainbow_plus_one(&star).unwrap();
    assert_eq!(col.num_colors(), 37);
    assert!(find_rainbow(&col, MotifSpec::linear_path(4).unwrap()).unwrap().is_none());

    let h = host(12, 4);
    let book = rainbow_plus_one(&build_family(h, FamilySpec::PairBook).unwrap()).unwrap();
    assert_eq!(book.num_colors(), 46);
    assert!(find_rainbow(&book, MotifSpec::linear_path(3).unwrap()).unwrap().is_none());

    let single = EdgeSet::from_ranks(host(6, 3), vec![4]).unwrap();
    let col = rainbow_plus_one(&single).unwrap();
    assert_eq!(col.num_colors(), 2);
    assert_eq!(col.color_of_rank(4), 0);
    assert_eq!(col.color_of_rank(0), 1);
}

#[test]
fn rainbow_plus_one_rejects_degenerate_bases() {
    let h = host(5, 3);
    assert!(rainbow_plus_one(&EdgeSet::empty(h)).is_err());
    assert!(rainbow_plus_one(&EdgeSet::complete(h).unwrap()).is_err());
}

#[test]
fn lower_bound_families_by_parity() {
    let h = host(12, 4);
    assert_eq!(lower_bound_family(h, MotifKind::LinearPath, 6).unwrap(), FamilySpec::Star { t: 2 });
    assert_eq!(lower_bound_family(h, MotifKind::LinearPath, 5).unwrap(), FamilySpec::StarPlusBook { t: 1 });
    assert_eq!(lower_bound_family(h, MotifKind::LoosePath, 5).unwrap(), FamilySpec::StarPlusEdge { t: 1 });
    assert!(lower_bound_family(h, MotifKind::BergePath, 5).is_err());
    assert!(lower_bound_family(h, MotifKind::LinearPath, 2).is_err());
    // Odd linear count: star, book on a fixed pair, one extra color.
    let col = lower_bound_coloring(h, MotifKind::LinearPath, 5).unwrap();
    assert_eq!(col.num_colors() as usize, c(12, 4) - c(11, 4) + c(9, 2) + 1);
}

#[test]
fn berge_block_schemes() {
    assert_eq!(BergeBlocks::for_path(3, 7).unwrap(), BergeBlocks::Sparse { block: 4, per_block: 2 });
    assert_eq!(BergeBlocks::for_path(3, 8).unwrap(), BergeBlocks::Full { block: 4 });
    assert_eq!(BergeBlocks::for_path(3, 4).unwrap(), BergeBlocks::Sparse { block: 4, per_block: 1 });
    assert!(BergeBlocks::for_path(3, 2).is_err());

    let col = berge_block_coloring(host(8, 3), 4).unwrap();
    assert_eq!(col.num_colors(), 3);
    assert_eq!(berge_block_coloring(host(21, 3), 7).unwrap().num_colors(), 11);
    let col = berge_block_coloring_with(host(21, 3), BergeBlocks::Full { block: 3 }).unwrap();
    assert_eq!(col.num_colors(), 8);
    // Blocks of 4 on 21 vertices: five full blocks, each K_4^(3).
    let col = berge_block_coloring(host(21, 3), 9).unwrap();
    assert_eq!(col.num_colors(), 5 * 4 + 1);
    assert!(berge_block_coloring_with(host(6, 3), BergeBlocks::Sparse { block: 4, per_block: 5 }).is_err());
}

#[test]
fn gadget_direct_union() {
    let h = host(6, 3);
    let segs = [
        Segment::Part(edge(&[0, 1])),
        Segment::Link(2),
        Segment::Part(edge(&[3, 4])),
    ];
    let path = assemble_linear_path(h, &segs).unwrap();
    assert_eq!(path.realized.edges, vec![edge(&[0, 1, 2]), edge(&[2, 3, 4])]);
}

#[test]
fn gadget_with_cherry() {
    // a1 = {3,4}, b1 = {4,5} meet in 4; the trailing link completes b1.
    let h = host(9, 3);
    let segs = [
        Segment::Part(edge(&[0, 1])),
        Segment::Link(2),
        Segment::Part(edge(&[3, 4])),
        Segment::Part(edge(&[4, 5])),
        Segment::Link(6),
    ];
    let path = assemble_linear_path(h, &segs).unwrap();
    let edges = &path.realized.edges;
    assert_eq!(edges.len(), 3);
    assert_eq!(edges[1].intersection(&edges[2]), vec![4]);
}

#[test]
fn gadget_errors() {
    let h = host(8, 3);
    assert!(assemble_linear_path(h, &[]).is_err());
    let dangling = [Segment::Part(edge(&[0, 1])), Segment::Part(edge(&[2, 3]))];
    assert!(assemble_linear_path(h, &dangling).is_err());
    let overlap = [
        Segment::Part(edge(&[0, 1])),
        Segment::Link(2),
        Segment::Part(edge(&[1, 3])),
    ];
    let err = assemble_linear_path(h, &overlap).unwrap_err().to_string();
    assert!(err.contains("#0") && err.contains("#1"), "{err}");
}

#[test]
fn cherry_examples() {
    let pairs: Vec<Edge> = (0..10u32).flat_map(|b| (0..b).map(move |a| edge(&[a, b]))).collect();
    let w = VertexSet::new(vec![0, 1]).unwrap();
    let found = find_cherry_pairs(&pairs, &w, 3).unwrap();
    assert_eq!(found.len(), 2);
    for p in &found {
        assert_eq!(p.a.intersection_size(&p.b), 1);
        assert!(p.union().iter().all(|v| !w.members().contains(v)));
    }
    assert!(found[0].union().iter().all(|v| !found[1].union().contains(v)));
    assert_eq!(find_cherry_pairs(&pairs, &w, 1).unwrap().len(), 1);

    let matching: Vec<Edge> = (0..5u32).map(|i| edge(&[2 * i, 2 * i + 1])).collect();
    match find_cherry_pairs(&matching, &VertexSet::empty(), 2) {
        Err(crate::Error::CherryShortfall { found, quota }) => {
            assert!(found.is_empty());
            assert_eq!(quota, 1);
        }
        other => panic!("expected a shortfall, got {other:?}"),
    }
}

#[test]
fn cherry_margin_is_positive_for_dense_gstar() {
    // All 2-subsets of 100 vertices, d = 2, t = 2 on s = 3.
    let m = cherry_density_margin(100, 3, 4950, 2, 2).unwrap();
    assert!(m > BigRational::from_integer(0.into()));
    assert!(cherry_density_margin(100, 2, 10, 1, 1).is_err());
}
