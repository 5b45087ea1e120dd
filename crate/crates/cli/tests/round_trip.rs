//! parse(serialize(x)) == x for all three instance formats.

use proptest::prelude::*;
use rainbow_cli::format::{parse_instance, write_dg, write_ecg, write_mg, Instance};
use rainbow_core::constructions::{random_colored_graph, random_digraph, random_multigraph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn colored_round_trip(n in 0usize..12, p in 0.0f64..=1.0, palette in 1u32..50, seed: u64) {
        let g = random_colored_graph(n, p, palette, seed).unwrap();
        prop_assert_eq!(parse_instance(&write_ecg(&g)).unwrap(), Instance::Colored(g));
    }

    #[test]
    fn multigraph_round_trip(n in 0usize..12, w in prop::array::uniform3(0u32..5), seed: u64) {
        prop_assume!(w.iter().sum::<u32>() > 0);
        let m = random_multigraph(n, w, seed).unwrap();
        prop_assert_eq!(parse_instance(&write_mg(&m)).unwrap(), Instance::Multi(m));
    }

    #[test]
    fn digraph_round_trip(n in 0usize..12, p in 0.0f64..=1.0, seed: u64) {
        let d = random_digraph(n, p, seed).unwrap();
        prop_assert_eq!(parse_instance(&write_dg(&d)).unwrap(), Instance::Di(d));
    }

    // shuffled lines, extra whitespace and comments do not matter
    #[test]
    fn layout_is_irrelevant(n in 2usize..10, seed: u64, rot in 0usize..50) {
        let g = random_colored_graph(n, 0.6, 4, seed).unwrap();
        let text = write_ecg(&g);
        let mut lines: Vec<&str> = text.lines().skip(1).collect();
        if !lines.is_empty() {
            let k = rot % lines.len();
            lines.rotate_left(k);
        }
        let mut noisy = format!("# generated\n  ecg   {} {}\n", g.n(), g.edge_count());
        for l in lines {
            noisy += &format!("\t{}  \n\n", l.replace(' ', "   "));
        }
        prop_assert_eq!(parse_instance(&noisy).unwrap(), Instance::Colored(g));
    }

    #[test]
    fn garbage_never_panics(text in "[a-z0-9 #\n]{0,80}") {
        let _ = parse_instance(&text);
    }
}

#[test]
fn reversed_duplicate_edge_is_rejected_with_its_line() {
    let e = parse_instance("mg 4 3\n0 1 1\n2 3 2\n1 0 2\n").unwrap_err();
    assert_eq!(e.line, 4);
    assert!(e.to_string().starts_with("line 4: duplicate"), "{e}");
}
