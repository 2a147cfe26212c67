"""Finite categories with concentration structures and their monoids."""
from .category import (FinCategory, FunctorData, ValidationReport, check_functor, compose_functors,
                       endomorphism_monoid, identity_functor, is_equivalent_to_trivial,
                       one_object_category, validate_category)
from .concentration import (AxiomReport, MorphismPartition, check_concentration, discrete_partition,
                            enumerate_concentrations, is_concentration,
                            is_concentration_isomorphism, is_concentration_preserving,
                            trivial_concentration)
from .errors import (ActionError, ConcentraError, ConcentrationError, InternalConsistencyError,
                     NormalityError, NotPreservingError, NotTwoLiftingError, SizeBoundError,
                     StructuralError, SubcategoryError)
from .monoid import (FinMonoid, MonoidHom, are_isomorphic, concentration_monoid, cyclic_group,
                     direct_product, find_isomorphism, is_normal_submonoid, klein_four_group,
                     quotient_by_normal_submonoid, semidirect_monoid, symmetric_group)
from .lifting import (check_2_lifting, check_multivalued_fibration, check_surjective_on_morphisms,
                      concentrating_functor, externalize, internalize, pullback_concentration,
                      verify_adjunction_triangles)
from .catalg import (CatAction, SubcategoryData, quotient_concentration, semidirect_category,
                     subcategory)
from .dirlim import (DirectedPoset, GroupDiagram, PosetAction, build_SG,
                     check_semidirect_decomposition, equivariant_direct_limit)
from .groupoids import (ThetaFamily, codiscrete_cover, theta_change_functor, theta_concentration,
                        torsor_groupoid)

__version__ = "0.1.0"
