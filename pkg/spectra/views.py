import logging

from django.conf import settings
from django.core.exceptions import ValidationError
from django.http import JsonResponse

from .families import family_from_params
from .services import spectrum_report
from .witnesses import WitnessFailure

logger = logging.getLogger(__name__)


def api_spectrum_report(request):
    """
    API endpoint con el informe espectral en JSON.

    Query params:
    - example: usl2 | uqsl2 | qtorus (requerido)
    - p: entero impar positivo (sólo qtorus)
    - m_max: nivel máximo (default: SKEWALG_DEFAULT_M_MAX)
    """
    example = request.GET.get('example')
    if not example:
        return JsonResponse({'error': 'Falta el parámetro example'}, status=400)

    try:
        m_max = int(request.GET.get('m_max', settings.SKEWALG_DEFAULT_M_MAX))
    except ValueError:
        return JsonResponse({'error': 'm_max debe ser un entero'}, status=400)
    if not 1 <= m_max <= settings.SKEWALG_MAX_M:
        return JsonResponse({'error': f'm_max debe estar entre 1 y {settings.SKEWALG_MAX_M}'}, status=400)

    try:
        family = family_from_params(example, p=request.GET.get('p'))
        report = spectrum_report(family, m_max)
    except ValidationError as e:
        return JsonResponse({'error': ' '.join(e.messages)}, status=400)
    except WitnessFailure as e:
        logger.error(f'Informe con testigos fallidos: {e.failures}')
        return JsonResponse({'error': str(e), 'failures': e.failures}, status=422)

    return JsonResponse(report.to_dict(), json_dumps_params={'ensure_ascii': False})
