//! Build the bundled algebras and print their path bases and Hom dimensions.

use shuffle_twist::path_algebra::{family, graded_hom_dims, write_algebra, AElem};

fn main() -> shuffle_twist::Result<()> {
    let a = family("sl2-principal")?;
    let basis: Vec<String> = (0..a.dim()).map(|i| a.render_elem(&AElem::basis(i))).collect();
    println!("{}: dim {}, basis {}", a.name, a.dim(), basis.join(", "));
    print!("{}", write_algebra(&a));
    for n in 2..=6 {
        let b = family(&format!("parabolic-sl({n})"))?;
        println!("{}: dim {}", b.name, b.dim());
    }
    let b = family("parabolic-sl(3)")?;
    for w in 0..b.num_vertices() {
        for v in 0..b.num_vertices() {
            let dims = graded_hom_dims(&b, w, v);
            if !dims.is_empty() {
                println!("1_{} A 1_{}: {:?}", b.vertex_label(w), b.vertex_label(v), dims);
            }
        }
    }
    Ok(())
}
