from .cratlas_utils import (CRAtlasError, InvalidRank, MismatchedSystem, InvalidPainting,
                            ZeroEntry, NonPrimitive, NonRegular, WrongLength, UnparseableIsotropy,
                            InvalidModulus, InvalidParameters, InvalidSpan, DegenerateForm,
                            UnsupportedRank, UnsupportedInstance, CatalogFormatError, FormatArray,
                            GetNumThreads)
from .rootsys import (SimpleLieType, ParseType, RootSystem, build_root_system, Weight, pairing,
                      diagram_automorphisms)
from .flag import (PaintedDiagram, product, parse_diagram, isotropy, complementary_positive_roots,
                   isotropy_roots, flag_dimension, canonical_painting, enumerate_paintings,
                   painted_isomorphisms, painted_automorphisms)
from .groups import SymbolicGroup, ParseGroup, TidyGroupName
from .standard_cr import (StandardCR, LeviSignature, make_standard, primitive_tuple, contact_data,
                          levi_signature, equivalent_standard, canonical_form, canonical_key,
                          enumerate_standard, ParseStandard)
from .nonstandard_cr import (Table2Entry, NonStandardCR, catalog, instantiate, dimension,
                             associated_flag, geometric_class, recognize, same_manifold,
                             equivalent_nonstandard, enumerate_table2, ParseNonStandard)
from .maximal_group import (ONISHCHIK_PAIRS, onishchik_pair, maximal_holomorphic_group,
                            transfer_contact_element, maximal_cr_group, cr_equivalent,
                            cr_class_key, is_standard_by_center)
from . import oracle
from .file_io import ReadCatalog, WriteCatalog, CatalogToTable, WriteASCIITable
from .cli import Parser, BuildCatalog, ReadManifold, main
