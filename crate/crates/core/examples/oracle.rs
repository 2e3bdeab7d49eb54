//! Exact local antimagic chromatic numbers of small graphs.

use antimagic::graph::{build_cycle, Graph};
use antimagic::oracle::{exact_chi_la, feasible_with_colors, SearchBudget};

fn main() -> antimagic::Result<()> {
    let budget = SearchBudget::from_env();
    let mut graphs = vec![("P3".to_string(), Graph::new(3, vec![(0, 1), (1, 2)])?)];
    graphs.extend((3..=8).map(|n| (format!("C{n}"), build_cycle(n).unwrap())));
    let chords = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 3), (1, 4)];
    graphs.push(("P7+chords".into(), Graph::new(7, chords)?));

    for (name, g) in &graphs {
        match exact_chi_la(g, budget) {
            Ok(r) => println!("{name}: chi_la = {} ({} nodes) witness {:?}", r.value, r.stats.nodes, r.witness.labels()),
            Err(e) => println!("{name}: {e}"),
        }
    }
    let two = feasible_with_colors(&graphs[4].1, 2, budget)?;
    println!("C5 with two colours: {}", if two.witness.is_some() { "yes" } else { "no" });
    Ok(())
}
