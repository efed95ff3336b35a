metadata = dict( name= 'starcode',
                 version = '0.1',
                 description='Perfect codes and perfect bitrades in Star graphs',
                 url='',
                 license='GPL',
                 long_description='',
                 packages = ['starcode'],
                 python_requires='>=3.7',
                 install_requires = ['numpy', 'scipy', 'galois'],
                 extras_require = {'test' : ['pytest', 'networkx']},
                 entry_points = {'console_scripts' : ['starcode = starcode.cli:main']}
               )

from setuptools import setup

setup ( **metadata )
