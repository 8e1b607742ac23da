//! Internal consistency checks raise `Violation`, the error behind exit code 2.

use spk_core::classify::{detect_standard_extension, ClassificationEntry};
use spk_core::orbits::irrep_report;
use spk_core::{IrrepDescriptor, LieError, ModuleDescriptor};

fn forged(module: &str) -> ClassificationEntry {
    let d: IrrepDescriptor = module.parse().unwrap();
    let mut orbit = irrep_report(&d).unwrap();
    orbit.lagrangian = true;
    ClassificationEntry {
        module: ModuleDescriptor::irreducible(d),
        orbit,
        standard_for: None,
        extension: None,
    }
}

#[test]
fn unexplained_lagrangian_entry_is_a_violation() {
    let err = detect_standard_extension(&forged("A2:1,1")).unwrap_err();
    assert!(matches!(err, LieError::Violation(_)), "{err}");
}

#[test]
fn forged_orbit_dimension_is_a_violation() {
    let mut e = forged("B5:0,0,0,0,1");
    e.orbit.orbit_dim += 1;
    let err = detect_standard_extension(&e).unwrap_err();
    assert!(matches!(err, LieError::Violation(_)), "{err}");
}

#[test]
fn genuine_extension_passes() {
    let x = detect_standard_extension(&forged("B5:0,0,0,0,1")).unwrap().unwrap();
    assert_eq!(x.module.to_string(), "D6:0,0,0,0,1,0");
    assert_eq!(x.orbit_dim, 16);
}
