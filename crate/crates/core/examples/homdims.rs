//! End-dimension bookkeeping on the bundled composition tables.

use shuffle_twist::cli::homdims;
use shuffle_twist::qmod::parse_comp_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["sl4_s2xs2.table", "parabolic_sl4.table"] {
        let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path)?;
        print!("{}", homdims(&parse_comp_table(&text)?).render());
        println!();
    }
    Ok(())
}
