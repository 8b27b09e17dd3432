//! Five users over GF(16) with the order-5 kernel β = α^3.

use gdm::{FieldElement, GaloisField, Gdm, GdmConfig, UserFrame};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = GaloisField::gf16();
    let gdm = Gdm::with_field(GdmConfig::new(field.params().clone(), 5), field.clone())?;
    assert_eq!(gdm.plan().kernel(), FieldElement::Pow(3));
    println!(
        "kernel {} of order {}",
        gdm.plan().kernel(),
        field.element_order(gdm.plan().kernel())?
    );
    for coset in gdm.structure().cosets() {
        println!("  C({}) = {coset:?}", coset[0]);
    }

    for bits in [0b01101u32, 0b11111, 0b10000] {
        let frame = UserFrame((0..5).map(|i| (bits >> (4 - i)) & 1).collect());
        let spectrum = gdm.multiplex(&frame)?;
        let compressed = gdm.compress(&spectrum)?;
        let back = gdm.demultiplex(&gdm.decompress(&compressed)?)?;
        println!("{frame} -> {spectrum} -> ({compressed}) -> {back}");
    }
    println!("gamma_cc = {}", gdm.compactness_factor());
    Ok(())
}
