from setuptools import setup, find_packages
import codecs
import os.path

# code for single sourcing versions
# reference: https://packaging.python.org/guides/single-sourcing-package-version/
def read(rel_path):
    here = os.path.abspath(os.path.dirname(__file__))
    with codecs.open(os.path.join(here, rel_path), 'r') as fp:
        return fp.read()

def get_version(rel_path):
    for line in read(rel_path).splitlines():
        if line.startswith('__version__'):
            delim = '"' if '"' in line else "'"
            return line.split(delim)[1]
    else:
        raise RuntimeError("Unable to find version string.")

this_directory = os.path.abspath(os.path.dirname(__file__))
with codecs.open(os.path.join(this_directory, 'README.md'), 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(name='symthompson',
      version=get_version("symthompson/__init__.py"),
      description='Tables, root groups and embeddings for symmetric Thompson groups V_n(H).',
      author='The SymThompson Developers',
      license='GNU General Public License v3',
      packages=find_packages(),
      install_requires=['matplotlib',
                        'numpy >= 1.16',
                        'sympy >= 1.5'],
      extras_require={'graphviz': ['pygraphviz']},
      entry_points={'console_scripts': ['symthompson = symthompson.cli:main']},
      zip_safe=False,
      test_suite='nose.collector',
      tests_require=['nose'],
      long_description=long_description,
      long_description_content_type='text/markdown')
