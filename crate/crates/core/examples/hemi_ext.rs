//! Ext groups between simple bimodules over `V_n ⋊ sl2`: degree 1 via the
//! closed form and via `N̂`, and the degree-2 anomaly from the spectral
//! sequence.

use leibniz::ext::{ext1_hemi_nhat, ext_hemi_spectral, ext_simple_closed, HemiSimple};

fn main() -> anyhow::Result<()> {
    for n in 1..=2 {
        println!("n = {n}");
        for p in 0..=4 {
            for m in 0..=3 {
                let src = HemiSimple::symmetric(p);
                let dst = HemiSimple::antisymmetric(m);
                let closed = ext_simple_closed(n, src, dst, 1)?;
                assert_eq!(closed, ext1_hemi_nhat(n, src, dst)?);
                if closed > 0 {
                    println!("  Ext^1({src}, {dst}) = {closed}");
                }
            }
        }
        let (src, dst) = (HemiSimple::symmetric(n), HemiSimple::antisymmetric(2));
        let r = ext_hemi_spectral(n, src, dst, 2)?;
        println!("  Ext^2({src}, {dst}) = {} ({:?})", r.dims[2], r.certificate);
        println!("  E2 page:\n{}", r.page);
    }
    Ok(())
}
