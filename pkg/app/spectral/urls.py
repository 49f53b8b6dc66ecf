"""
Url mappings for the spectral API.
"""
from django.urls import path

from spectral import views

app_name = 'spectral'

urlpatterns = [
    path('factorize/', views.FactorizeView.as_view(), name='factorize'),
    path('verblunsky/', views.VerblunskyView.as_view(), name='verblunsky'),
    path('reports/<str:which>/', views.ReportView.as_view(), name='report'),
]
