"""
CLI para calcular determinantes, condensar matrices, contar arborescencias
y verificar las identidades de condensación desde línea de comandos.
"""
import argparse
import json
import logging
import sys

from . import __version__
from .arborescence import (
    GraphError,
    count_arborescences,
    enumerate_arborescences,
    original_parents,
    relabel_root,
)
from .config import settings
from .formats import (
    InputFormatError,
    format_matrix,
    format_parent_list,
    format_symbolic_matrix,
    read_graph_file,
    read_matrix_file,
)
from .funcmap import FuncMapError
from .fuzz_service import FuzzService
from .identities import generic_matrix, symbolic_ring
from .matrix import (
    InternalIdentityError,
    MatrixError,
    chio_condense,
    chio_condense_leading,
    chio_det,
    leibniz_det,
)
from .models import Command
from .ring import RingError, RingSpecError, ring_from_spec
from .verification_service import VerificationRequestError, VerificationService

# Configurar logging para CLI (stderr: stdout queda reservado para los resultados)
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL),
    format='%(asctime)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def _banner(title: str) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)


def _footer(text: str) -> None:
    print("-" * 60)
    print(text)
    print("-" * 60)


def _data_ring(spec: str):
    """Anillo para matrices o grafos leídos de archivo (entradas enteras)"""
    if spec.strip().lower() == "poly":
        raise RingSpecError("--ring poly solo vale para condense --n y verify --mode symbolic")
    return ring_from_spec(spec)


def cmd_det(command: Command) -> int:
    """Imprime el determinante exacto de la matriz del archivo"""
    ring = _data_ring(command.ring)
    A = read_matrix_file(command.inputs[0], ring)
    algo = command.flags["algo"]
    as_json = command.flags["json"]
    values = {}
    if algo in ("leibniz", "both"):
        values["leibniz"] = leibniz_det(A)
    if algo in ("chio", "both"):
        values["chio"] = chio_det(A)

    if as_json:
        for name, value in values.items():
            print(json.dumps({"algo": name, "ring": ring.describe(), "n": A.rows, "det": str(value)}))
    else:
        _banner(f"DETERMINANTE ({A.rows}x{A.cols} sobre {ring.describe()})")
        if algo == "both":
            for name, value in values.items():
                print(f"{name}: {value}")
        else:
            print(values[algo])

    if algo == "both" and values["leibniz"] != values["chio"]:
        logger.error(f"Los algoritmos no coinciden: leibniz={values['leibniz']} chio={values['chio']}")
        if not as_json:
            _footer("RESULTADO: los algoritmos NO coinciden")
        return EXIT_FAILED
    if algo == "both" and not as_json:
        _footer("RESULTADO: los algoritmos coinciden")
    return EXIT_OK


def cmd_condense(command: Command) -> int:
    """Imprime la matriz condensada y el factor a^{n−2} del pivote"""
    flags = command.flags
    if command.ring.strip().lower() == "poly":
        if command.inputs:
            raise RingSpecError("condense --ring poly construye la matriz genérica: use --n en lugar de un archivo")
        if flags["n"] is None:
            raise RingSpecError("condense --ring poly requiere --n")
        ring = symbolic_ring(flags["n"])
        A = generic_matrix(ring, flags["n"])
    else:
        if not command.inputs:
            raise InputFormatError("condense requiere un archivo de matriz (o --ring poly --n N)")
        ring = _data_ring(command.ring)
        A = read_matrix_file(command.inputs[0], ring)

    if flags["pivot"] == "leading":
        condensed, factor = chio_condense_leading(A)
    else:
        condensed, factor = chio_condense(A)
    symbolic = command.ring.strip().lower() == "poly"

    if flags["json"]:
        print(json.dumps({
            "pivot": flags["pivot"],
            "ring": ring.describe(),
            "rows": [[str(v) for v in row] for row in condensed.to_rows()],
            "factor": str(factor),
        }))
        return EXIT_OK

    pivot_label = "a_{1,1}" if flags["pivot"] == "leading" else f"a_{{{A.rows},{A.rows}}}"
    _banner(f"CONDENSACIÓN DE CHIO ({A.rows}x{A.rows}, pivote {pivot_label})")
    lines = format_symbolic_matrix(condensed) if symbolic else format_matrix(condensed)
    for line in lines:
        print(line)
    print(f"factor: {factor}")
    return EXIT_OK


def cmd_verify(command: Command) -> int:
    """Verifica una identidad y devuelve 0 solo si todos los casos pasan"""
    flags = command.flags
    service = VerificationService(workers=flags["workers"])
    summary = service.run(
        theorem=flags["theorem"],
        n=flags["n"],
        mode=flags["mode"],
        trials=flags["trials"],
        seed=command.seed,
        ring=command.ring,
    )

    if flags["json"]:
        for report in summary.reports:
            print(report.model_dump_json())
    else:
        seed_label = f", semilla {summary.seed}" if summary.seed is not None else ""
        _banner(f"VERIFICACIÓN {summary.theorem} n={summary.n} ({summary.mode}, {summary.ring}{seed_label})")
        for report in summary.reports:
            print(report.to_line())
        status = "VERIFICADO" if summary.all_verified else "FALLÓ"
        _footer(f"RESULTADO: {status} ({summary.passed}/{summary.total_cases} casos)")

    return EXIT_OK if summary.all_verified else EXIT_FAILED


def cmd_arborescences(command: Command) -> int:
    """Cuenta o enumera las arborescencias con la raíz pedida"""
    flags = command.flags
    ring = _data_ring(command.ring)
    g = read_graph_file(command.inputs[0], ring)
    root = g.n if flags["root"] is None else flags["root"]
    relabeled = relabel_root(g, root)

    if flags["action"] == "count":
        value = count_arborescences(relabeled)
        if flags["json"]:
            print(json.dumps({"root": root, "ring": ring.describe(), "count": str(value)}))
        else:
            _banner(f"ARBORESCENCIAS CON RAÍZ {root} ({g.n} vértices sobre {ring.describe()})")
            print(f"count: {value}")
        return EXIT_OK

    if not flags["json"]:
        _banner(f"ARBORESCENCIAS CON RAÍZ {root} ({g.n} vértices sobre {ring.describe()})")
    total = 0
    for tree, weight in enumerate_arborescences(relabeled):
        parents = format_parent_list(original_parents(tree, root))
        if flags["json"]:
            print(json.dumps({"tree": parents, "weight": str(weight)}))
        else:
            print(f"tree: {parents} weight: {weight}")
        total += 1
    if not flags["json"]:
        _footer(f"TOTAL: {total} arborescencias con peso no nulo")
    return EXIT_OK


def cmd_fuzz(command: Command) -> int:
    """Fuzzing diferencial; devuelve 0 solo si no hubo desacuerdos"""
    flags = command.flags
    summary = FuzzService(workers=flags["workers"]).run(cases=flags["cases"], seed=command.seed)

    if flags["json"]:
        for result in summary.results:
            print(result.model_dump_json())
    else:
        _banner(f"FUZZING DIFERENCIAL (semilla {summary.seed})")
        for result in summary.results:
            if not result.agree:
                print(result.to_line())
        _footer(f"fuzz: {summary.total_cases} cases, {summary.failures} failures")

    return EXIT_OK if summary.failures == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condensation-kit",
        description=f"Condensación de Chio y teorema matriz-árbol en aritmética exacta v{__version__}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Ejemplos:
  %(prog)s det matriz.txt --algo both              Comparar Leibniz y Chio
  %(prog)s condense matriz.txt                     Condensar con pivote a_{n,n}
  %(prog)s condense --ring poly --n 3              Condensación simbólica 3x3
  %(prog)s verify --theorem chio-gen --n 3 --mode symbolic
  %(prog)s verify --theorem mtt --n 5 --trials 100 --seed 7
  %(prog)s arborescences count --graph grafo.txt --root 2
  %(prog)s fuzz --cases 1000 --seed 42
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Comando a ejecutar')

    def add_common(sub: argparse.ArgumentParser, ring_default: str | None = "int") -> None:
        sub.add_argument('--ring', default=ring_default, help='Anillo: int, mod:<m> o poly')
        sub.add_argument('--json', action='store_true', help='Un objeto JSON por línea de reporte')

    # Comando 'det'
    det_parser = subparsers.add_parser('det', help='Determinante exacto de una matriz')
    det_parser.add_argument('file', help='Archivo de matriz')
    det_parser.add_argument('--algo', choices=['leibniz', 'chio', 'both'], default='chio', help='Algoritmo')
    add_common(det_parser)

    # Comando 'condense'
    condense_parser = subparsers.add_parser('condense', help='Un paso de condensación de Chio')
    condense_parser.add_argument('file', nargs='?', help='Archivo de matriz')
    condense_parser.add_argument('--n', type=int, help='Tamaño de la matriz genérica (con --ring poly)')
    condense_parser.add_argument('--pivot', choices=['last', 'leading'], default='last', help='Pivote a_{n,n} o a_{1,1}')
    add_common(condense_parser)

    # Comando 'verify'
    verify_parser = subparsers.add_parser('verify', help='Verificar una identidad')
    verify_parser.add_argument('--theorem', required=True, choices=['chio', 'chio-gen', 'supergen', 'mtt'])
    verify_parser.add_argument('--n', type=int, required=True, help='Tamaño de la matriz (o vértices)')
    verify_parser.add_argument('--mode', choices=['symbolic', 'random'], default='random')
    verify_parser.add_argument('--trials', type=int, help='Casos aleatorios')
    verify_parser.add_argument('--seed', type=int, help='Semilla de 64 bits')
    verify_parser.add_argument('--workers', type=int, help='Procesos en paralelo')
    add_common(verify_parser, ring_default=None)

    # Comando 'arborescences'
    arb_parser = subparsers.add_parser('arborescences', help='Contar o enumerar arborescencias')
    arb_parser.add_argument('action', choices=['count', 'enumerate'])
    arb_parser.add_argument('--graph', required=True, help='Archivo de digrafo')
    arb_parser.add_argument('--root', type=int, help='Raíz (por defecto n)')
    add_common(arb_parser)

    # Comando 'fuzz'
    fuzz_parser = subparsers.add_parser('fuzz', help='Fuzzing diferencial de los algoritmos')
    fuzz_parser.add_argument('--cases', type=int, help='Número de casos')
    fuzz_parser.add_argument('--seed', type=int, help='Semilla de 64 bits')
    fuzz_parser.add_argument('--workers', type=int, help='Procesos en paralelo')
    fuzz_parser.add_argument('--json', action='store_true', help='Un objeto JSON por caso')

    return parser


def parse_command(args: argparse.Namespace) -> Command:
    flags = {k: v for k, v in vars(args).items() if k not in ('command', 'file', 'graph', 'ring', 'seed')}
    inputs = [p for p in (getattr(args, 'file', None), getattr(args, 'graph', None)) if p]
    return Command(
        subcommand=args.command,
        flags=flags,
        inputs=inputs,
        ring=getattr(args, 'ring', None),
        seed=getattr(args, 'seed', None),
    )


HANDLERS = {
    'det': cmd_det,
    'condense': cmd_condense,
    'verify': cmd_verify,
    'arborescences': cmd_arborescences,
    'fuzz': cmd_fuzz,
}


def main(argv: list[str] | None = None) -> int:
    """Punto de entrada del CLI"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_INPUT_ERROR

    command = parse_command(args)
    logger.debug(f"Comando: {command.model_dump()}")

    try:
        return HANDLERS[command.subcommand](command)

    except InternalIdentityError as e:
        print(f"\n❌ ERROR INTERNO: {e}", file=sys.stderr)
        logger.exception("Falló una identidad que debería valer")
        return EXIT_FAILED

    except (InputFormatError, RingError, MatrixError, FuncMapError, GraphError, VerificationRequestError) as e:
        print(f"❌ ERROR DE ENTRADA: {e}", file=sys.stderr)
        logger.warning(f"Entrada rechazada: {e}")
        return EXIT_INPUT_ERROR

    except ValueError as e:
        print(f"❌ ERROR DE ENTRADA: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    except Exception as e:
        print(f"\n❌ ERROR INESPERADO: {e}", file=sys.stderr)
        logger.exception("Error durante la ejecución")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
