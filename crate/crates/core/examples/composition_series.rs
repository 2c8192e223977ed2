//! Graded composition series of Verma modules and projectives, with their radical layers.

use std::sync::Arc;

use shuffle_twist::cli::{composition_table, render_aligned};
use shuffle_twist::path_algebra::parabolic_sl;
use shuffle_twist::qmod::{parabolic_verma, radical_series};

fn main() -> shuffle_twist::Result<()> {
    let a = Arc::new(parabolic_sl(4)?);
    print!("{}", render_aligned(&composition_table(&a)?));
    let m = parabolic_verma(&a, 1)?;
    for (k, layer) in radical_series(&m).iter().enumerate() {
        let factors: Vec<String> = layer.keys().map(|(v, d)| format!("L({})<{d}>", a.vertex_label(*v))).collect();
        println!("rad^{k} M(s1) / rad^{}: {}", k + 1, factors.join(" "));
    }
    Ok(())
}
