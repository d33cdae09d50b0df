pub struct CharacteristicPolynomial;
pub struct InstanceSquaredSides;
pub trait SystemEncoding {}
pub struct SystemId;
