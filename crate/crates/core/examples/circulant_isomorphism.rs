//! Multiplier isomorphisms and spectra of 16-vertex circulants.

use antimagic::circulant::{certify_multiplier, circulant_spectrum, spectra_equal};
use antimagic::graph::{are_isomorphic, build_circulant, CirculantSpec};

fn main() -> antimagic::Result<()> {
    let c = |steps: &[usize]| CirculantSpec::new(16, steps.to_vec());
    for (from, b) in [(c(&[1, 3])?, 11), (c(&[1, 3, 5])?, 3), (c(&[1, 3, 5])?, 5)] {
        let map = certify_multiplier(&from, b)?;
        println!("{} -> {} via i -> {b}i", map.from, map.to);
    }

    let a = c(&[1, 3])?;
    let b = c(&[1, 7])?;
    let (sa, sb) = (circulant_spectrum(&a), circulant_spectrum(&b));
    println!("{a} vs {b}: same spectrum = {}", spectra_equal(&sa, &sb, 1e-9));
    let iso = are_isomorphic(&build_circulant(&a)?, &build_circulant(&b)?);
    println!("{a} vs {b}: isomorphic = {}", iso.is_some());
    Ok(())
}
