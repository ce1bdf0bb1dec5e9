use tritile::*;
use tritile::io::*;
use tritile::generators::random_coloring;
use proptest::prelude::*;

#[test]
fn parses_comments_and_colors() {
    let text = "# a triangle\n3 3\n0 1 r\n# mid comment\n1 2 b\n0 2 r\n";
    let g = parse_colored(text).unwrap();
    assert_eq!(g.color(1, 2), Some(Color::Blue));
    assert_eq!(write_colored(&g), "3 3\n0 1 r\n0 2 r\n1 2 b\n");
}

#[test]
fn rejects_bad_files() {
    assert!(parse_graph("").is_err());
    assert!(parse_graph("3 2\n0 1 r\n").is_err());
    assert!(parse_graph("3 2\n0 1 r\n1 2\n").is_err());
    assert!(parse_graph("3 1\n0 1 g\n").is_err());
    assert_eq!(parse_graph("3 1\n1 1 r\n"), Err(Error::SelfLoop(1)));
}

#[test]
fn plain_graphs() {
    let g = parse_plain("4 2\n0 1\n2 3\n").unwrap();
    assert_eq!(g.edge_count(), 2);
    assert_eq!(write_plain(&g), "4 2\n0 1\n2 3\n");
    assert!(parse_colored("4 2\n0 1\n2 3\n").is_err());
}

#[test]
fn tiling_text() {
    let t = parse_tiling("0 1 2 r\n3 4 5 b\n", Mode::Weak).unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(write_tiling(&t), "0 1 2 r\n3 4 5 b\n");
    assert!(parse_tiling("0 1 r\n", Mode::Weak).is_err());
}

proptest! {
    #[test]
    fn round_trip_is_identity(n in 0usize..14, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = tritile::generators::random_graph(n, p, seed);
        let cg = random_coloring(&g, 0.5, seed ^ 1).unwrap();
        let text = write_colored(&cg);
        let back = parse_colored(&text).unwrap();
        prop_assert_eq!(&back, &cg);
        prop_assert_eq!(write_colored(&back), text);
    }
}
