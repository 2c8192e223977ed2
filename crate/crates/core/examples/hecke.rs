//! Hecke algebra products, KL polynomials and the Grothendieck group shadow of shuffling.

use shuffle_twist::coxeter_hecke::*;

fn main() -> shuffle_twist::Result<()> {
    let s = Perm::simple(3, 1);
    let hs = HeckeElem::h(&s);
    println!("H_s H_s = {}", hecke_mul(&hs, &hs)?.render());
    let w = Perm::parse_word(4, "s2*s1*s3*s2")?;
    for x in Perm::all(4).iter().filter(|x| x.bruhat_leq(&w).unwrap_or(false)) {
        let p = kl_polynomial(x, &w)?;
        if p != LaurentPoly::one() {
            println!("p_{{{}, {}}} = {}", x.word_string(), w.word_string(), p.render("q"));
        }
    }
    println!("C_w0 = {}", c_basis(&Perm::longest(3))?.render());
    let t = K0Tables::principal(2)?;
    let ms = K0Class::basis_class(&t.labels, K0Basis::M, "s1", 0)?;
    println!("[M(s)] H_s = {}", k0_shuffle_shadow(&ms, 2, 1)?);
    println!("[M(s)] in L = {}", k0_base_change(&ms, K0Basis::L, &t)?);
    Ok(())
}
