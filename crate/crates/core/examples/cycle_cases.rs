//! Merges C-labeled cycles into 3-colour graphs, one per case.

use antimagic::cycle_transform::{case_order, case_plan, transform_cycle, CasePlanId};
use antimagic::graph::chromatic_number;

fn main() -> antimagic::Result<()> {
    let k = 2;
    for case in 1..=8u8 {
        let n = case_order(case, k);
        let t = transform_cycle(n, &case_plan(CasePlanId::Case(case, k))?)?;
        let mut degrees = t.graph.degrees();
        degrees.sort_unstable();
        degrees.dedup();
        println!(
            "case {case}: C_{n} -> {} vertices, degrees {degrees:?}, chi = {}, colours {:?}",
            t.graph.vertex_count(),
            chromatic_number(&t.graph),
            t.colors()
        );
    }
    Ok(())
}
