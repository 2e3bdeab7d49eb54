//! Builds the merge matrix for `C_n`, `n = 2^(s+2)(t+2)`, and prints it.
//!
//! Run with `cargo run --example construction_matrix -- 3 2`.

use antimagic::cycle_transform::build_construction_matrix;

fn main() -> antimagic::Result<()> {
    let mut args = std::env::args().skip(1);
    let s: u32 = args.next().map_or(3, |x| x.parse().expect("s"));
    let t: usize = args.next().map_or(2, |x| x.parse().expect("t"));
    let m = build_construction_matrix(s, t)?;
    println!("C_{} merged to {} ({} blocks)", m.arrays.n, m.spec, m.order());
    print!("{}", m.render());
    Ok(())
}
