//! Chevalley–Eilenberg cohomology of sl2, brute force against the Weyl
//! shortcut `H*(g, W) = H*(g, K) ⊗ W^g`.

use leibniz::cohomology::{ce_cohomology, ce_cohomology_weyl};
use leibniz::repsl2::{simple_module, sl2};

fn main() -> anyhow::Result<()> {
    let g = sl2();
    for m in 0..=4 {
        let v = simple_module(m);
        let brute = ce_cohomology(&g, v.module(), 3)?.dims();
        let weyl = ce_cohomology_weyl(&g, v.module(), 3)?;
        assert_eq!(brute, weyl);
        println!("H*(sl2, V{m}) = {brute:?}");
    }
    let w = simple_module(2).direct_sum(&simple_module(0)).direct_sum(&simple_module(0));
    println!("H*(sl2, V2+V0+V0) = {:?}", ce_cohomology(&g, w.module(), 3)?.dims());
    Ok(())
}
