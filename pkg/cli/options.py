"""
Opciones comunes de los comandos y su validación.

Códigos de salida: 0 éxito, 1 testigo fallido o error de E/S, 2 uso incorrecto.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from scalars.field import Scalar, ScalarParseError
from scalars.parsing import parse_scalar
from spectra.families import KIND_CHOICES, ExampleFamily, family_from_params
from spectra.witnesses import exceptional_lambdas

USAGE_ERROR = 2
FAILURE = 1
SIGN_CHOICES = ('+', '-')
FORMAT_CHOICES = ('json', 'md')


def usage_error(message: str) -> CommandError:
    return CommandError(message, returncode=USAGE_ERROR)


def failure(message: str) -> CommandError:
    return CommandError(message, returncode=FAILURE)


def add_family_arguments(parser):
    parser.add_argument(
        '--example',
        choices=KIND_CHOICES,
        required=True,
        help='Familia de ejemplo: usl2, uqsl2, qtorus o adu'
    )
    parser.add_argument('--p', type=int, help='Número de generadores del toro cuántico (impar)')
    parser.add_argument('--n', type=int, help='Exponente n de u = ck^n + f(k) (adu)')
    parser.add_argument('--f', help='Polinomio de Laurent f(k) con a_n = 0, p. ej. "k^-1" (adu)')


def add_m_max_argument(parser):
    parser.add_argument(
        '--m-max',
        type=int,
        default=None,
        help=f'Nivel máximo m (default: {settings.SKEWALG_DEFAULT_M_MAX})'
    )


def add_format_argument(parser, default=None, help_text='Formato de salida: json o md'):
    parser.add_argument('--format', choices=FORMAT_CHOICES, default=default, help=help_text)


def add_level_arguments(parser):
    parser.add_argument('--m', type=int, required=True, help='Nivel m del λ excepcional')
    parser.add_argument(
        '--sign',
        choices=SIGN_CHOICES,
        default='+',
        help='Signo del λ excepcional (default: +)'
    )


@dataclass(frozen=True)
class CliConfig:
    """Configuración validada de una invocación."""
    command: str
    family: ExampleFamily
    m_max: int
    lam: Optional[Scalar] = None
    fmt: str = 'json'
    out: Optional[Path] = None
    seed: Optional[int] = None

    @classmethod
    def from_options(cls, command: str, options: dict) -> 'CliConfig':
        return cls(
            command=command,
            family=family_from_options(options),
            m_max=m_max_from_options(options),
            lam=lambda_from_options(options),
            fmt=options.get('format') or 'json',
            out=output_path(options.get('out')),
            seed=options.get('seed'),
        )


def family_from_options(options: dict) -> ExampleFamily:
    try:
        return family_from_params(options['example'], p=options.get('p'), n=options.get('n'), f=options.get('f'))
    except ValidationError as exc:
        raise usage_error(' '.join(exc.messages))


def m_max_from_options(options: dict) -> int:
    m_max = options.get('m_max')
    if m_max is None:
        m_max = settings.SKEWALG_DEFAULT_M_MAX
    if not 1 <= m_max <= settings.SKEWALG_MAX_M:
        raise usage_error(f'--m-max debe estar entre 1 y {settings.SKEWALG_MAX_M} (recibido {m_max})')
    return m_max


def lambda_from_options(options: dict) -> Optional[Scalar]:
    text = options.get('lambda')
    if text is None:
        return None
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise usage_error(f'--lambda inválido: {exc}')


def output_path(out: Optional[str]) -> Optional[Path]:
    """Un nombre de archivo sin directorio se ubica en SKEWALG_REPORT_DIR."""
    if not out:
        return None
    path = Path(out)
    if path.parent == Path('.') and not out.startswith('.'):
        path = Path(settings.SKEWALG_REPORT_DIR) / path
    return path


def exceptional_choice(family: ExampleFamily, m: int, sign: str) -> Scalar:
    """λ excepcional de nivel m con el signo pedido."""
    if not family.is_spectral:
        raise usage_error(f'{family.label} no tiene formas cerradas espectrales')
    if not 1 <= m <= settings.SKEWALG_MAX_M:
        raise usage_error(f'--m debe estar entre 1 y {settings.SKEWALG_MAX_M}')
    lambdas = exceptional_lambdas(family, m)
    index = SIGN_CHOICES.index(sign)
    if index >= len(lambdas):
        raise usage_error(f'{family.label} tiene un único λ excepcional por nivel')
    return lambdas[index]


def write_output(command, text: str, out: Optional[Path]):
    """Escribe en ``out`` o, si no se indicó, en stdout."""
    if out is None:
        command.stdout.write(text, ending='')
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding='utf-8')
    except OSError as exc:
        raise failure(f'No se pudo escribir {out}: {exc}')
    command.stdout.write(command.style.SUCCESS(f'✓ Informe escrito en {out}'))
