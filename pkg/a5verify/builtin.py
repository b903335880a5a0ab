from a5verify.fpgroups import Presentation
from a5verify.fpgroups import PresentationError

PRESENTATIONS = {
    'lemma-bac3': """
gens: a b c
a^2
b^3
c^2
(a b)^3
(b c)^2
(c a)^5
(b a c)^3
""",
    'a5-xy': """
gens: x y
x^2
y^5
(x y)^3
""",
    'gtilde-a5': """
# the binary icosahedral extension: lemma-bac3 without (bac)^3
gens: a b c
a^2
b^3
c^2
(a b)^3
(b c)^2
(c a)^5
""",
    'gamma0': """
gens: a b c d x0
a^2
b^3
c^2
d^2
(a b)^3
(b c)^2
(c d)^5
x0 a x0^-1 = d
""",
}

# built from their complexes on demand
COMPLEX_PRESENTATIONS = ('gamma-os-a5', 'poincare')


def presentation_names():
    return sorted(list(PRESENTATIONS) + list(COMPLEX_PRESENTATIONS))


def presentation(name):
    if name in PRESENTATIONS:
        return Presentation.parse(PRESENTATIONS[name], name=name)
    if name in COMPLEX_PRESENTATIONS:
        from a5verify.gcomplex import brown_presentation
        result = brown_presentation(orbit_complex(name)).presentation
        result.name = name
        return result
    raise PresentationError(
        "Unknown built-in presentation '%s', choose from: %s" %
        (name, ', '.join(presentation_names())))


def complex_names():
    return list(COMPLEX_PRESENTATIONS)


def orbit_complex(name):
    from a5verify.gcomplex import ComplexError
    from a5verify.gcomplex import gamma_os_a5
    from a5verify.gcomplex import poincare_complex
    constructors = {
        'gamma-os-a5': gamma_os_a5,
        'poincare': poincare_complex,
    }
    try:
        return constructors[name]()
    except KeyError:
        raise ComplexError(
            "Unknown built-in complex '%s', choose from: %s" %
            (name, ', '.join(complex_names())))
