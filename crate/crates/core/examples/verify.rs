//! The comparison of shuffling and twisting, and the braid relations, as verification reports.

use shuffle_twist::functors::{verify_braid, verify_main_theorem};

fn main() -> shuffle_twist::Result<()> {
    print!("{}", verify_main_theorem(3, 0)?.render());
    print!("{}", verify_braid(3, 0)?.render());
    Ok(())
}
