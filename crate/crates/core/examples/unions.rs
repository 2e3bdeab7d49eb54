//! Labels one-point unions of cycles and merges them down to few colours.

use antimagic::labeling::color_count;
use antimagic::union::{
    pairing_directives, smallest_step, transform_union, union_2labeling_family1, union_2labeling_family2,
    union_3labeling, UnionSpec,
};

fn main() -> antimagic::Result<()> {
    for u in [union_2labeling_family1(9)?, union_2labeling_family2(9)?] {
        println!("{}: colours {:?}", u.spec, color_count(&u.graph, &u.labeling)?.colors());
        let dirs = pairing_directives(&u.spec, smallest_step)?;
        let (h, f) = transform_union(&u, &dirs)?;
        let names: Vec<String> = dirs.iter().map(ToString::to_string).collect();
        println!("  [{}] -> colours {:?}", names.join(", "), color_count(&h, &f)?.colors());
    }

    let u = union_3labeling(&UnionSpec::new(vec![16, 16, 20])?)?;
    println!("{}: colours {:?}", u.spec, color_count(&u.graph, &u.labeling)?.colors());
    Ok(())
}
