# Generated by Django 5.2.3 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerdictRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('spec_json', models.TextField()),
                ('digest', models.CharField(max_length=64, unique=True)),
                ('mode', models.CharField(choices=[('abelian', 'Abelian P'), ('frattini', 'Frattini quotient')], default='abelian', max_length=20)),
                ('outcome', models.CharField(choices=[('finite', 'tau-tilting finite'), ('infinite', 'tau-tilting infinite'), ('unknown', 'Undecided')], max_length=20)),
                ('reason', models.CharField(max_length=64)),
                ('hyperfocal', models.JSONField(blank=True, null=True)),
                ('certificate', models.JSONField(blank=True, null=True)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'ordering': ['-updated_at'],
                'indexes': [models.Index(fields=['outcome', '-updated_at'], name='decide_verd_outcome_5b1c2e_idx')],
            },
        ),
    ]
