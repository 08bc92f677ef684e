mod common;

use avec::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use avec::Graph;
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph6_round_trip(seed in any::<u64>(), n in 0usize..120, p in 0.0f64..1.0) {
        let g = random_graph(&mut rng(seed), n, p);
        let text = write_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 1usize..60, p in 0.0f64..0.5) {
        let g = random_graph(&mut rng(seed), n, p);
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn orders_from_63_use_the_long_size_form() {
    for n in [62, 63, 64, 500] {
        let g = Graph::path(n);
        let text = write_graph6(&g);
        assert_eq!(text.starts_with('~'), n >= 63, "n={n}");
        assert_eq!(text.len(), if n >= 63 { 4 } else { 1 } + (n * (n - 1) / 2).div_ceil(6));
        assert_eq!(parse_graph6(&text).unwrap(), g, "n={n}");
    }
}

#[test]
fn header_and_known_encodings() {
    assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), Graph::cycle(5));
    assert_eq!(write_graph6(&Graph::path(2)), "A_");
    assert_eq!(write_graph6(&Graph::empty(2)), "A?");
    assert_eq!(write_graph6(&Graph::complete(4)), "C~");
}

#[test]
fn malformed_graph6_is_rejected() {
    for bad in ["", "D", "Dh", "Dhcc", ":Dhc", "&Dhc", "D\u{7f}c", "Dhd", "A`"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn edge_list_comments_and_errors() {
    let g = parse_edge_list("# a triangle\nn 3\n0 1 # first\n1 2\n\n2 0\n").unwrap();
    assert_eq!(g, Graph::complete(3));
    assert_eq!(parse_edge_list("0 1\n1 2\n").unwrap(), Graph::path(3));
    for bad in ["n 2\n0 0\n", "n 2\n0 5\n", "0 1\nn 4\n", "0 x\n"] {
        assert!(parse_edge_list(bad).is_err(), "{bad:?}");
    }
}
