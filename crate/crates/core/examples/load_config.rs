//! Load a JSON configuration and summarize it.
//!
//! ```text
//! cargo run --example load_config -- crates/core/data/path_matrix.json
//! ```

use bslemma::load_config;

fn main() -> bslemma::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/equilateral10.json").into());
    let c = load_config(&path)?.materialize()?;
    println!("space     {}", c.space().label());
    println!("points    {}", c.len());
    println!("diameter  {}", c.diameter());
    println!("min dist  {}", c.min_pairwise_distance());
    Ok(())
}
