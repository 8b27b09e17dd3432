//! Fifteen binary users multiplexed over GF(16), compressed to the five
//! coset leaders and recovered.

use gdm::{FieldParams, Gdm, GdmConfig, UserFrame};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gdm = Gdm::new(GdmConfig::new(FieldParams::gf16(), 15))?;
    let frame: UserFrame = "0,1,1,0,1,0,0,0,1,0,1,1,0,0,1".parse()?;

    let spectrum = gdm.multiplex(&frame)?;
    let compressed = gdm.compress(&spectrum)?;
    println!("users      {frame}");
    println!("spectrum   {spectrum}");
    for coset in gdm.structure().cosets() {
        let values: Vec<String> = coset.iter().map(|&k| spectrum[k].to_string()).collect();
        println!("  C({}) = {:?} -> {}", coset[0], coset, values.join(","));
    }
    println!("compressed {compressed}");

    let restored = gdm.decompress(&compressed)?;
    let recovered = gdm.demultiplex(&restored)?;
    assert_eq!(recovered, frame);
    println!("recovered  {recovered}");
    println!(
        "gamma_cc = {}, bandwidth {} B1 full / {} B1 compressed",
        gdm.compactness_factor(),
        gdm.bandwidth_requirements(false),
        gdm.bandwidth_requirements(true)
    );
    Ok(())
}
