//! Reading and writing graph6 and edge lists.

use distspec::{parse_edgelist, parse_graph6, to_graph6, Graph};

fn main() -> distspec::Result<()> {
    let p4 = parse_edgelist("# path on four vertices\n4 3\n0 1\n1 2\n2 3\n")?;
    println!("P4 as graph6: {}", to_graph6(&p4));
    print!("P4 as edge list:\n{}", p4.to_edgelist());

    for code in ["@", "A_", "Bw", "CF", ">>graph6<<Dhc"] {
        let g = parse_graph6(code)?;
        let edges: Vec<(usize, usize)> = g.edges().collect();
        println!("{code:<14} n={} edges={edges:?}", g.n());
        assert_eq!(parse_graph6(&to_graph6(&g))?, g);
    }

    let big = Graph::from_edges(70, (0..70).flat_map(|v| (v + 1..70).map(move |w| (v, w))))?;
    let code = to_graph6(&big);
    println!(
        "K70 uses the long header: {}... ({} bytes)",
        &code[..6],
        code.len()
    );

    for bad in ["", "A", "A_x", "~~"] {
        println!("{bad:?} -> {}", parse_graph6(bad).unwrap_err());
    }
    Ok(())
}
