//! Labels cycles and even circulants, then prints their induced colours.
//!
//! Run with `cargo run --example circulant_labeling -- 16 1,3`.

use antimagic::circulant::{c_labeling, circulant_closed_forms, circulant_labeling, labeling_matrix_view};
use antimagic::graph::CirculantSpec;
use antimagic::labeling::{color_count, is_local_antimagic};

fn main() -> antimagic::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(16, |s| s.parse().expect("order"));
    let steps: Vec<usize> = args
        .next()
        .map_or_else(|| vec![1, 3], |s| s.split(',').map(|x| x.parse().expect("step")).collect());

    let (cycle, f) = c_labeling(m)?;
    println!("C_{m}: labels {:?}", f.labels());
    println!("  colours {:?}", color_count(&cycle, &f)?.colors());

    let spec = CirculantSpec::new(m, steps)?;
    let (g, f) = circulant_labeling(&spec)?;
    assert!(is_local_antimagic(&g, &f)?);
    println!("{spec}: colours {:?}", color_count(&g, &f)?.colors());
    println!("  closed forms {:?}", circulant_closed_forms(&spec));
    if m <= 24 {
        print!("{}", labeling_matrix_view(&g, &f)?.render());
    }
    Ok(())
}
