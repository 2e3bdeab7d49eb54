//! Writes a labeled graph as JSON, reads it back, verifies it and prints DOT.

use antimagic::circulant::circulant_labeling;
use antimagic::graph::CirculantSpec;
use antimagic::io::{to_dot, verify_document, Check, Document, Recipe};

fn main() -> antimagic::Result<()> {
    let spec = CirculantSpec::new(8, vec![1, 3])?;
    let (g, f) = circulant_labeling(&spec)?;
    let recipe = Recipe::new("label circulant")
        .param("m", 8)
        .param("steps", "1,3")
        .check(Check::ColorCount(3))
        .check(Check::RegularDegree(4));
    let doc = Document::labeled(g, f).with_recipe(recipe);

    let json = doc.to_json()?;
    let back = Document::from_json(&json)?;
    print!("{}", verify_document(&back)?.render());
    println!("{}", to_dot(&back.graph, back.labeling.as_ref())?);
    Ok(())
}
