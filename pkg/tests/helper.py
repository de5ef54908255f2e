import io
import itertools
import sys

try:
    import cratlas
except ImportError:
    sys.path.append('..')
    import cratlas
from cratlas.cratlas_utils import TupleGCD


def AdmissibleTuples(d, bound):
    """
    Every tuple with entries in [-bound, bound] that makes a standard CR manifold over the painted
    diagram ``d``: no zero entry, no common divisor, and regular.  Unlike
    :func:`cratlas.enumerate_standard` nothing is identified, so the result contains whole
    equivalence classes.
    """
    values = [x for x in range(-bound, bound+1) if x]
    result = []
    for p in itertools.product(values, repeat=len(d.black)):
        if TupleGCD(p) != 1:
            continue
        try:
            result.append(cratlas.make_standard(d, p))
        except cratlas.NonRegular:
            continue
    return result


def RunCLI(argv):
    """
    Run the command line in-process and return ``(exit code, stdout text, stderr text)``.
    """
    stdout = io.StringIO()
    stderr = io.StringIO()
    old_stdout, old_stderr = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = stdout, stderr
    try:
        code = cratlas.main(argv)
    finally:
        sys.stdout, sys.stderr = old_stdout, old_stderr
    return code, stdout.getvalue(), stderr.getvalue()
