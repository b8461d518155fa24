//! Small hand-checkable graphs run through the full filter.

mod support;

use mcfilter::errorsim::{surviving_errors, transition_nonlazy, Graph};
use mcfilter::filter::{min_filter, product_filter, FilterMode};
use mcfilter::markov::matrix_power;
use support::oracle::FIVE_VERTEX_EDGES;

#[test]
fn five_vertex_neighborhood() {
    let g = Graph::from_edges(5, &FIVE_VERTEX_EDGES).unwrap();
    let walk = transition_nonlazy(&g).unwrap();
    let two = matrix_power(&walk, 2).unwrap();

    let one_step: Vec<f64> = walk.matrix().column(0);
    let two_step: Vec<f64> = two.column(0);
    assert_eq!(one_step, vec![0.0, 0.25, 0.25, 0.25, 0.25]);
    let sixth = 1.0 / 6.0;
    for (got, want) in two_step.iter().zip([0.5, sixth, sixth, sixth, 0.0]) {
        assert!((got - want).abs() < 1e-15);
    }

    let third = 1.0 / 3.0;
    for report in [
        min_filter(&walk, 2, FilterMode::Lenient).unwrap(),
        product_filter(&walk, FilterMode::Lenient).unwrap(),
    ] {
        // from x5 the one-step and two-step targets are disjoint
        assert_eq!(report.annihilated_columns, vec![4]);
        for (got, want) in report.q.matrix().column(0).iter().zip([0.0, third, third, third, 0.0]) {
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }
    }
}

#[test]
fn pendant_bridge_edge_is_removed() {
    // x1..x4 as before, x5 bridging to a separate triangle x5 x6 x7.
    let mut edges = FIVE_VERTEX_EDGES.to_vec();
    edges.extend([(4, 5), (4, 6), (5, 6)]);
    let g = Graph::from_edges(7, &edges).unwrap();
    let report = min_filter(&transition_nonlazy(&g).unwrap(), 2, FilterMode::Strict).unwrap();
    assert_eq!(report.q.get(4, 0), 0.0);
    assert_eq!(report.q.get(0, 4), 0.0);
    for (u, v) in g.edges().filter(|&e| e != (0, 4)) {
        assert!(report.q.get(u, v) > 0.0 && report.q.get(v, u) > 0.0, "edge {u}-{v}");
    }
    assert_eq!(report.zeroed_pairs, 2);
}

#[test]
fn lattice_is_fully_annihilated() {
    for m in [2, 3, 10] {
        let g = Graph::grid(m);
        let report = min_filter(&transition_nonlazy(&g).unwrap(), 2, FilterMode::Lenient).unwrap();
        assert_eq!(report.annihilated_columns, (0..m * m).collect::<Vec<_>>());
        assert!(min_filter(&transition_nonlazy(&g).unwrap(), 2, FilterMode::Strict).is_err());
    }
}

#[test]
fn odd_cycle_with_chord() {
    let base = Graph::cycle(5);
    let mut g = base.clone();
    g.add_edge(0, 2);
    let report = min_filter(&transition_nonlazy(&g).unwrap(), 2, FilterMode::Lenient).unwrap();
    // the triangle 0-1-2 survives; the remaining cycle edges have no 2-step support
    let e = surviving_errors(&base, &report).unwrap();
    assert_eq!((e.ordered, e.unordered), (2, 1));
    assert!(report.q.get(1, 0) > 0.0);
    assert_eq!(report.q.get(3, 4), 0.0);
}
