//! Build the hemi-semidirect product `V_1 ⋊ sl2`, inspect its Leibniz
//! kernel and Lie quotient, and round-trip it through JSON.

use leibniz::algebra::{hemi_semidirect, leibniz_kernel, lie_quotient, LeibnizAlgebra};
use leibniz::repsl2::{simple_module, sl2};

fn main() -> anyhow::Result<()> {
    let h = hemi_semidirect(&sl2(), simple_module(1).module())?;
    println!("h = V1 ⋊ sl2, dim {}, Lie: {}", h.dim(), h.is_lie());
    println!("{h}");

    let leib = leibniz_kernel(&h);
    println!("Leib(h) has dimension {}", leib.dim());

    let q = lie_quotient(&h);
    println!("h_Lie has dimension {} with basis {:?}", q.dim(), q.algebra.labels());

    let json = h.to_json();
    let back = LeibnizAlgebra::from_json(&json)?;
    assert_eq!(back.constants(), h.constants());
    println!("JSON: {json}");
    Ok(())
}
