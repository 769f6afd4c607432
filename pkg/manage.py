#!/usr/bin/env python
"""
Punto de entrada de skewalg.

Comandos del proyecto:
    check_identities, exceptional, scan, jm_table, goldie, report, find_pm

Uso:
    python manage.py report --example usl2 --m-max 4
    python manage.py test
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "No se pudo importar Django. ¿Está instalado y disponible en PYTHONPATH? "
            "¿Olvidaste activar el entorno virtual?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
